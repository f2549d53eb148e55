#include "decsau/attacks.hpp"

#include <algorithm>
#include <string>

#include "decsau/error.hpp"

namespace decsau {
namespace {

Block block_at(std::span<const std::uint8_t> bytes, std::size_t index) {
    Block out{};
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(index * kBlockSize), kBlockSize,
                out.begin());
    return out;
}

void require_aligned(std::span<const std::uint8_t> bytes, const char* what) {
    if (bytes.size() % kBlockSize != 0) {
        throw Error(ErrorCode::LengthMismatch, std::string(what) + " of " +
                                                   std::to_string(bytes.size()) +
                                                   " bytes is not block-aligned");
    }
}

}  // namespace

Bytes Oracle::query(std::span<const std::uint8_t> input) {
    ++queries_;
    Bytes reply = transform_(input);
    if (reply.size() != input.size()) {
        throw Error(ErrorCode::OracleFailure, "oracle answered " + std::to_string(reply.size()) +
                                                  " bytes to a " + std::to_string(input.size()) +
                                                  "-byte query");
    }
    return reply;
}

EncryptionOracle EncryptionOracle::simulated(const MasterKey& mk) {
    return EncryptionOracle([mk](std::span<const std::uint8_t> plain) {
        return encrypt_stream(mk, plain).data;
    });
}

DecryptionOracle DecryptionOracle::simulated(const MasterKey& mk) {
    return DecryptionOracle([mk](std::span<const std::uint8_t> cipher) {
        return decrypt_stream(mk, ByteStream{Bytes(cipher.begin(), cipher.end()), cipher.size()});
    });
}

std::pair<Bytes, Bytes> craft_cpa_plaintexts(std::size_t n_blocks) {
    if (n_blocks == 0) {
        throw Error(ErrorCode::InvalidArgument, "at least one block is required");
    }
    Bytes zeros(n_blocks * kBlockSize, 0);
    Bytes ramp(n_blocks * kBlockSize);
    for (std::size_t i = 0; i < ramp.size(); ++i) {
        ramp[i] = static_cast<std::uint8_t>(i % kBlockSize + 1);
    }
    return {std::move(zeros), std::move(ramp)};
}

ShuffleMap recover_shuffle_map(const Block& delta) {
    std::array<bool, kBlockSize> seen{};
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        const std::uint8_t source = delta[i];
        if (source < 1 || source > kBlockSize || seen[source - 1]) {
            throw Error(ErrorCode::InconsistentDelta,
                        "ciphertext difference is not a permutation of 1..32");
        }
        seen[source - 1] = true;
    }
    ShuffleMap::Channel rc{};
    ShuffleMap::Channel lc{};
    std::size_t k = 0;
    for (std::size_t position = 1; position <= kBlockSize; ++position) {
        const std::size_t source = delta[position - 1];
        if (source % 2 == position % 2 || delta[source - 1] != position) {
            throw Error(ErrorCode::InconsistentDelta,
                        "position " + std::to_string(position) +
                            " is not swapped with a partner of opposite parity");
        }
        if (position % 2 == 1) {
            rc[k] = static_cast<std::uint8_t>(position);
            lc[k] = static_cast<std::uint8_t>(source);
            ++k;
        }
    }
    return ShuffleMap::from_channels(rc, lc);
}

Block recover_key_block(const Block& zero_cipher, const ShuffleMap& map) noexcept {
    return apply_shuffle(zero_cipher, map);
}

CpaResult differential_cpa(EncryptionOracle& oracle, std::span<const std::uint8_t> target) {
    require_aligned(target, "target ciphertext");
    if (target.empty()) {
        throw Error(ErrorCode::LengthMismatch, "target ciphertext is empty");
    }
    const std::size_t n_blocks = target.size() / kBlockSize;
    const auto [p1, p2] = craft_cpa_plaintexts(n_blocks);
    const Bytes c1 = oracle.query(p1);
    const Bytes c2 = oracle.query(p2);

    std::vector<EquivalentKeyEntry> entries;
    entries.reserve(n_blocks);
    for (std::size_t i = 0; i < n_blocks; ++i) {
        const Block zero_cipher = block_at(c1, i);
        const ShuffleMap map = recover_shuffle_map(xor_blocks(zero_cipher, block_at(c2, i)));
        const Block key = recover_key_block(zero_cipher, map);
        if (!(build_shuffle_map(key) == map)) {
            throw Error(ErrorCode::InconsistentDelta,
                        "recovered key block " + std::to_string(i + 1) +
                            " does not generate the observed shuffle");
        }
        entries.push_back({key, map});
    }
    EquivalentKey key(std::move(entries));
    Bytes plaintext = decrypt_with_equivalent_key(key, target);
    return {std::move(key), std::move(plaintext)};
}

std::vector<Block> extend_key_chain(const Block& k1, const ChaoticStream& stream, std::size_t n) {
    std::vector<Block> chain;
    if (n == 0) return chain;
    chain.reserve(n);
    KeyBlock current{1, k1};
    chain.push_back(current.bytes);
    while (chain.size() < n) {
        current = next_key_block(current, stream);
        chain.push_back(current.bytes);
    }
    return chain;
}

std::vector<KeyBlock> chosen_ciphertext_attack(DecryptionOracle& oracle, std::size_t n_blocks) {
    if (n_blocks == 0) {
        throw Error(ErrorCode::LengthMismatch, "at least one block is required");
    }
    const Bytes reply = oracle.query(Bytes(n_blocks * kBlockSize, 0));
    std::vector<KeyBlock> keys;
    keys.reserve(n_blocks);
    for (std::size_t i = 0; i < n_blocks; ++i) {
        keys.push_back({i + 1, block_at(reply, i)});
    }
    return keys;
}

Bytes cycle_attack(EncryptionOracle& oracle, std::span<const std::uint8_t> target) {
    require_aligned(target, "target ciphertext");
    Bytes current(target.begin(), target.end());
    for (int round = 0; round < 3; ++round) {
        current = oracle.query(current);
    }
    return current;
}

Bytes decrypt_with_equivalent_key(const EquivalentKey& key, std::span<const std::uint8_t> cipher) {
    require_aligned(cipher, "ciphertext");
    const std::size_t n_blocks = cipher.size() / kBlockSize;
    if (n_blocks > key.block_count()) {
        throw Error(ErrorCode::LengthMismatch,
                    "ciphertext has " + std::to_string(n_blocks) + " blocks, equivalent key covers " +
                        std::to_string(key.block_count()));
    }
    Bytes plain(cipher.size());
    for (std::size_t i = 0; i < n_blocks; ++i) {
        const auto& entry = key.entries()[i];
        const Block out = xor_blocks(apply_shuffle(block_at(cipher, i), entry.shuffle), entry.key);
        std::copy(out.begin(), out.end(), plain.begin() + static_cast<std::ptrdiff_t>(i * kBlockSize));
    }
    return plain;
}

}  // namespace decsau
