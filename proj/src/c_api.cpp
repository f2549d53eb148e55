#include "decsau/decsau.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "decsau/attacks.hpp"
#include "decsau/audio.hpp"
#include "decsau/cipher.hpp"
#include "decsau/error.hpp"
#include "decsau/formats.hpp"
#include "decsau/metrics.hpp"

struct decsau_key {
    decsau::MasterKey key;
};

struct decsau_clip {
    decsau::AudioClip clip;
};

struct decsau_container {
    decsau::CipherContainer container;
};

struct decsau_oracle {
    decsau_oracle_kind kind;
    std::optional<decsau::EncryptionOracle> encryptor;
    std::optional<decsau::DecryptionOracle> decryptor;

    std::size_t query_count() const {
        return encryptor ? encryptor->query_count() : decryptor->query_count();
    }
};

struct decsau_eqkey {
    decsau::EquivalentKey key;
};

namespace {

thread_local std::string g_last_error;

decsau_status to_status(decsau::ErrorCode code) {
    using decsau::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return DECSAU_ERR_INVALID_ARGUMENT;
        case ErrorCode::DegenerateKey: return DECSAU_ERR_DEGENERATE_KEY;
        case ErrorCode::DomainError: return DECSAU_ERR_DOMAIN;
        case ErrorCode::MalformedStream: return DECSAU_ERR_MALFORMED_STREAM;
        case ErrorCode::LengthMismatch: return DECSAU_ERR_LENGTH_MISMATCH;
        case ErrorCode::InconsistentDelta: return DECSAU_ERR_INCONSISTENT_DELTA;
        case ErrorCode::UnsupportedFormat: return DECSAU_ERR_UNSUPPORTED_FORMAT;
        case ErrorCode::MalformedRiff: return DECSAU_ERR_MALFORMED_RIFF;
        case ErrorCode::BadMagic: return DECSAU_ERR_BAD_MAGIC;
        case ErrorCode::LengthInconsistency: return DECSAU_ERR_LENGTH_INCONSISTENCY;
        case ErrorCode::OracleFailure: return DECSAU_ERR_ORACLE;
        case ErrorCode::Io: return DECSAU_ERR_IO;
    }
    return DECSAU_ERR_INTERNAL;
}

decsau_status fail(decsau_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs body, translating exceptions into status codes at the C boundary.
template <typename Body>
decsau_status guarded(Body&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        return DECSAU_OK;
    } catch (const decsau::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(DECSAU_ERR_NO_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(DECSAU_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DECSAU_ERR_INTERNAL, "unknown exception");
    }
}

void require(bool condition, const char* message) {
    if (!condition) throw decsau::Error(decsau::ErrorCode::InvalidArgument, message);
}

std::span<const std::uint8_t> view(const uint8_t* data, size_t size) {
    require(data != nullptr || size == 0, "NULL data with non-zero size");
    return {data, size};
}

void fill(decsau_buffer* out, std::span<const std::uint8_t> bytes, bool text = false) {
    // One spare byte so text results can be NUL-terminated; malloc(0) is avoided.
    auto* data = static_cast<uint8_t*>(std::malloc(bytes.size() + 1));
    if (data == nullptr) throw std::bad_alloc();
    if (!bytes.empty()) std::memcpy(data, bytes.data(), bytes.size());
    if (text) data[bytes.size()] = 0;
    out->data = data;
    out->size = bytes.size();
}

void fill_text(decsau_buffer* out, std::string_view text) {
    fill(out, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()}, true);
}

decsau::Oracle::Transform callback_transform(decsau_transform_fn fn, void* user_data) {
    return [fn, user_data](std::span<const std::uint8_t> input) {
        decsau::Bytes output(input.size());
        if (fn(user_data, input.data(), input.size(), output.data()) != 0) {
            throw decsau::Error(decsau::ErrorCode::OracleFailure, "oracle callback reported failure");
        }
        return output;
    };
}

}  // namespace

extern "C" {

const char* decsau_version(void) { return "1.0.0"; }

const char* decsau_status_name(decsau_status status) {
    switch (status) {
        case DECSAU_OK: return "Ok";
        case DECSAU_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case DECSAU_ERR_DEGENERATE_KEY: return "DegenerateKey";
        case DECSAU_ERR_DOMAIN: return "DomainError";
        case DECSAU_ERR_MALFORMED_STREAM: return "MalformedStream";
        case DECSAU_ERR_LENGTH_MISMATCH: return "LengthMismatch";
        case DECSAU_ERR_INCONSISTENT_DELTA: return "InconsistentDelta";
        case DECSAU_ERR_UNSUPPORTED_FORMAT: return "UnsupportedFormat";
        case DECSAU_ERR_MALFORMED_RIFF: return "MalformedRiff";
        case DECSAU_ERR_BAD_MAGIC: return "BadMagic";
        case DECSAU_ERR_LENGTH_INCONSISTENCY: return "LengthInconsistency";
        case DECSAU_ERR_ORACLE: return "OracleFailure";
        case DECSAU_ERR_IO: return "Io";
        case DECSAU_ERR_NO_MEMORY: return "NoMemory";
        case DECSAU_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* decsau_last_error_message(void) { return g_last_error.c_str(); }

void decsau_buffer_free(decsau_buffer* buffer) {
    if (buffer == nullptr) return;
    std::free(buffer->data);
    buffer->data = nullptr;
    buffer->size = 0;
}

decsau_status decsau_key_from_bytes(const uint8_t* bytes, size_t size, decsau_key** out) {
    return guarded([&] {
        require(out != nullptr, "NULL output handle");
        *out = new decsau_key{decsau::MasterKey::from_bytes(view(bytes, size))};
    });
}

decsau_status decsau_key_from_hex(const char* text, decsau_key** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "NULL argument");
        *out = new decsau_key{decsau::parse_key_text(text)};
    });
}

decsau_status decsau_key_generate(decsau_key** out) {
    return guarded([&] {
        require(out != nullptr, "NULL output handle");
        std::random_device entropy;
        std::uniform_int_distribution<int> byte(0, 255);
        decsau::Block bytes{};
        bool all_zero = true;
        while (all_zero) {
            for (auto& b : bytes) b = static_cast<std::uint8_t>(byte(entropy));
            all_zero = std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
        }
        *out = new decsau_key{decsau::MasterKey::from_bytes(bytes)};
    });
}

decsau_status decsau_key_to_hex(const decsau_key* key, char out[DECSAU_KEY_HEX_SIZE]) {
    return guarded([&] {
        require(key != nullptr && out != nullptr, "NULL argument");
        const std::string hex = decsau::to_hex(key->key.bytes());
        std::memcpy(out, hex.c_str(), DECSAU_KEY_HEX_SIZE);
    });
}

void decsau_key_free(decsau_key* key) { delete key; }

decsau_status decsau_encrypt(const decsau_key* key, const uint8_t* plain, size_t size,
                             decsau_buffer* cipher_out) {
    return guarded([&] {
        require(key != nullptr && cipher_out != nullptr, "NULL argument");
        fill(cipher_out, decsau::encrypt_stream(key->key, view(plain, size)).data);
    });
}

decsau_status decsau_decrypt(const decsau_key* key, const uint8_t* cipher, size_t size,
                             uint64_t original_length, decsau_buffer* plain_out) {
    return guarded([&] {
        require(key != nullptr && plain_out != nullptr, "NULL argument");
        const auto bytes = view(cipher, size);
        decsau::ByteStream stream{decsau::Bytes(bytes.begin(), bytes.end()), original_length};
        fill(plain_out, decsau::decrypt_stream(key->key, stream));
    });
}

decsau_status decsau_clip_parse_wav(const uint8_t* bytes, size_t size, decsau_clip** out) {
    return guarded([&] {
        require(out != nullptr, "NULL output handle");
        *out = new decsau_clip{decsau::parse_wav(view(bytes, size))};
    });
}

decsau_status decsau_clip_create(uint32_t sample_rate, const uint8_t* samples, size_t size,
                                 decsau_clip** out) {
    return guarded([&] {
        require(out != nullptr, "NULL output handle");
        require(sample_rate > 0, "sample rate must be positive");
        const auto bytes = view(samples, size);
        *out = new decsau_clip{decsau::AudioClip{sample_rate, decsau::Bytes(bytes.begin(), bytes.end())}};
    });
}

decsau_status decsau_synthesize_sine(double freq_hz, uint32_t sample_rate, size_t n_samples,
                                     int amplitude, decsau_clip** out) {
    return guarded([&] {
        require(out != nullptr, "NULL output handle");
        *out = new decsau_clip{decsau::synthesize_sine(freq_hz, sample_rate, n_samples, amplitude)};
    });
}

uint32_t decsau_clip_sample_rate(const decsau_clip* clip) {
    return clip ? clip->clip.sample_rate : 0;
}

const uint8_t* decsau_clip_samples(const decsau_clip* clip, size_t* size) {
    if (size) *size = clip ? clip->clip.samples.size() : 0;
    return clip ? clip->clip.samples.data() : nullptr;
}

decsau_status decsau_clip_write_wav(const decsau_clip* clip, decsau_buffer* out) {
    return guarded([&] {
        require(clip != nullptr && out != nullptr, "NULL argument");
        fill(out, decsau::write_wav(clip->clip));
    });
}

void decsau_clip_free(decsau_clip* clip) { delete clip; }

decsau_status decsau_container_create(uint64_t original_length, uint32_t sample_rate,
                                      const uint8_t* payload, size_t size, decsau_container** out) {
    return guarded([&] {
        require(out != nullptr, "NULL output handle");
        const auto bytes = view(payload, size);
        decsau::CipherContainer c{original_length, sample_rate,
                                  decsau::Bytes(bytes.begin(), bytes.end())};
        // Same validation as the reader.
        decsau::write_container(c);
        *out = new decsau_container{std::move(c)};
    });
}

decsau_status decsau_container_read(const uint8_t* bytes, size_t size, decsau_container** out) {
    return guarded([&] {
        require(out != nullptr, "NULL output handle");
        *out = new decsau_container{decsau::read_container(view(bytes, size))};
    });
}

decsau_status decsau_container_write(const decsau_container* container, decsau_buffer* out) {
    return guarded([&] {
        require(container != nullptr && out != nullptr, "NULL argument");
        fill(out, decsau::write_container(container->container));
    });
}

uint64_t decsau_container_original_length(const decsau_container* container) {
    return container ? container->container.original_length : 0;
}

uint32_t decsau_container_sample_rate(const decsau_container* container) {
    return container ? container->container.sample_rate : 0;
}

const uint8_t* decsau_container_payload(const decsau_container* container, size_t* size) {
    if (size) *size = container ? container->container.payload.size() : 0;
    return container ? container->container.payload.data() : nullptr;
}

void decsau_container_free(decsau_container* container) { delete container; }

decsau_status decsau_oracle_from_callback(decsau_oracle_kind kind, decsau_transform_fn fn,
                                          void* user_data, decsau_oracle** out) {
    return guarded([&] {
        require(fn != nullptr && out != nullptr, "NULL argument");
        auto* oracle = new decsau_oracle{kind, std::nullopt, std::nullopt};
        if (kind == DECSAU_ORACLE_ENCRYPT) {
            oracle->encryptor.emplace(callback_transform(fn, user_data));
        } else {
            oracle->decryptor.emplace(callback_transform(fn, user_data));
        }
        *out = oracle;
    });
}

decsau_status decsau_oracle_simulated(decsau_oracle_kind kind, const decsau_key* key,
                                      decsau_oracle** out) {
    return guarded([&] {
        require(key != nullptr && out != nullptr, "NULL argument");
        auto* oracle = new decsau_oracle{kind, std::nullopt, std::nullopt};
        if (kind == DECSAU_ORACLE_ENCRYPT) {
            oracle->encryptor.emplace(decsau::EncryptionOracle::simulated(key->key));
        } else {
            oracle->decryptor.emplace(decsau::DecryptionOracle::simulated(key->key));
        }
        *out = oracle;
    });
}

decsau_oracle_kind decsau_oracle_get_kind(const decsau_oracle* oracle) {
    return oracle ? oracle->kind : DECSAU_ORACLE_ENCRYPT;
}

size_t decsau_oracle_query_count(const decsau_oracle* oracle) {
    return oracle ? oracle->query_count() : 0;
}

void decsau_oracle_free(decsau_oracle* oracle) { delete oracle; }

decsau_status decsau_attack_cpa(decsau_oracle* oracle, const uint8_t* target, size_t size,
                                decsau_eqkey** eqkey_out, decsau_buffer* plain_out) {
    return guarded([&] {
        require(oracle != nullptr && oracle->encryptor, "chosen-plaintext attack needs an encryption oracle");
        auto result = decsau::differential_cpa(*oracle->encryptor, view(target, size));
        if (plain_out) fill(plain_out, result.plaintext);
        if (eqkey_out) *eqkey_out = new decsau_eqkey{std::move(result.key)};
    });
}

decsau_status decsau_attack_cca(decsau_oracle* oracle, size_t n_blocks, decsau_buffer* key_blocks_out) {
    return guarded([&] {
        require(oracle != nullptr && oracle->decryptor, "chosen-ciphertext attack needs a decryption oracle");
        require(key_blocks_out != nullptr, "NULL output buffer");
        const auto keys = decsau::chosen_ciphertext_attack(*oracle->decryptor, n_blocks);
        decsau::Bytes flat;
        flat.reserve(keys.size() * decsau::kBlockSize);
        for (const auto& k : keys) flat.insert(flat.end(), k.bytes.begin(), k.bytes.end());
        fill(key_blocks_out, flat);
    });
}

decsau_status decsau_attack_cycle(decsau_oracle* oracle, const uint8_t* target, size_t size,
                                  decsau_buffer* plain_out) {
    return guarded([&] {
        require(oracle != nullptr && oracle->encryptor, "cycle attack needs an encryption oracle");
        require(plain_out != nullptr, "NULL output buffer");
        fill(plain_out, decsau::cycle_attack(*oracle->encryptor, view(target, size)));
    });
}

size_t decsau_eqkey_block_count(const decsau_eqkey* eqkey) {
    return eqkey ? eqkey->key.block_count() : 0;
}

decsau_status decsau_eqkey_decrypt(const decsau_eqkey* eqkey, const uint8_t* cipher, size_t size,
                                   decsau_buffer* plain_out) {
    return guarded([&] {
        require(eqkey != nullptr && plain_out != nullptr, "NULL argument");
        fill(plain_out, decsau::decrypt_with_equivalent_key(eqkey->key, view(cipher, size)));
    });
}

decsau_status decsau_eqkey_dump(const decsau_eqkey* eqkey, decsau_buffer* text_out) {
    return guarded([&] {
        require(eqkey != nullptr && text_out != nullptr, "NULL argument");
        fill_text(text_out, decsau::format_equivalent_key(eqkey->key));
    });
}

decsau_status decsau_eqkey_parse(const char* text, size_t size, decsau_eqkey** out) {
    return guarded([&] {
        require((text != nullptr || size == 0) && out != nullptr, "NULL argument");
        *out = new decsau_eqkey{decsau::parse_equivalent_key(std::string_view(text, size))};
    });
}

void decsau_eqkey_free(decsau_eqkey* eqkey) { delete eqkey; }

decsau_status decsau_format_key_blocks(const uint8_t* key_blocks, size_t size, decsau_buffer* text_out) {
    return guarded([&] {
        require(text_out != nullptr, "NULL output buffer");
        const auto bytes = view(key_blocks, size);
        if (size % decsau::kBlockSize != 0) {
            throw decsau::Error(decsau::ErrorCode::LengthMismatch, "key blocks are not block-aligned");
        }
        std::vector<decsau::KeyBlock> blocks;
        for (std::size_t i = 0; i < size / decsau::kBlockSize; ++i) {
            decsau::KeyBlock k{i + 1, {}};
            std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(i * decsau::kBlockSize),
                        decsau::kBlockSize, k.bytes.begin());
            blocks.push_back(k);
        }
        fill_text(text_out, decsau::format_key_blocks(blocks));
    });
}

decsau_status decsau_analysis_csv(const uint8_t* samples, size_t size, uint32_t sample_rate,
                                  decsau_csv_kind kind, decsau_buffer* text_out) {
    return guarded([&] {
        require(text_out != nullptr, "NULL output buffer");
        const auto bytes = view(samples, size);
        switch (kind) {
            case DECSAU_CSV_TIME:
                fill_text(text_out, decsau::time_csv(bytes));
                return;
            case DECSAU_CSV_SPECTRUM:
                fill_text(text_out, decsau::spectrum_csv(decsau::magnitude_spectrum(bytes, sample_rate)));
                return;
            case DECSAU_CSV_STATS:
                fill_text(text_out, decsau::stats_csv(bytes, sample_rate));
                return;
        }
        require(false, "unknown CSV kind");
    });
}

}  // extern "C"
