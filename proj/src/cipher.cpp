#include "decsau/cipher.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decsau/error.hpp"

namespace decsau {
namespace {

// floor(x * (k(j)^2 + k(j-1))) with k(0) := k(1); the integer part is exact.
std::uint32_t scaled_term(const Block& k, std::size_t index0, double x) {
    const std::uint32_t current = k[index0];
    const std::uint32_t before = index0 == 0 ? k[0] : k[index0 - 1];
    const std::uint32_t weight = current * current + before;
    return static_cast<std::uint32_t>(std::floor(x * static_cast<double>(weight)));
}

}  // namespace

double derive_x0(std::span<const std::uint8_t, kBlockSize> mk) {
    std::uint32_t sum = 0;
    for (std::size_t j = 1; j <= kBlockSize; ++j) {
        sum += static_cast<std::uint32_t>(mk[j - 1]) * static_cast<std::uint32_t>(j + 1);
    }
    if (sum == 0) {
        throw Error(ErrorCode::DegenerateKey, "master key derives x0 = 0 (all-zero key)");
    }
    return static_cast<double>(sum) / kKeyWeightScale;
}

ChaoticStream logistic_stream(double x0) {
    if (!(x0 > 0.0 && x0 < 1.0)) {
        throw Error(ErrorCode::DomainError, "logistic initial condition must lie in (0, 1)");
    }
    ChaoticStream stream;
    stream.x0 = x0;
    double x = x0;
    for (auto& out : stream.xs) {
        x = (kLogisticLambda * x) * (1.0 - x);
        out = x;
    }
    return stream;
}

MasterKey MasterKey::from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBlockSize) {
        throw Error(ErrorCode::InvalidArgument,
                    "master key must be 32 bytes, got " + std::to_string(bytes.size()));
    }
    Block key{};
    std::copy(bytes.begin(), bytes.end(), key.begin());
    const double x0 = derive_x0(key);
    return MasterKey(key, x0);
}

KeyBlock next_key_block(const KeyBlock& prev, const ChaoticStream& stream) {
    KeyBlock next;
    next.index = prev.index + 1;
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        const double x = stream.xs[i];
        const auto raw = static_cast<std::uint8_t>(scaled_term(prev.bytes, i, x) % 256u);
        next.bytes[i] =
            raw != prev.bytes[i] ? raw : static_cast<std::uint8_t>(std::floor(x * 256.0));
    }
    return next;
}

std::vector<KeyBlock> key_chain(const MasterKey& mk, std::size_t n) {
    const ChaoticStream stream = mk.stream();
    std::vector<KeyBlock> chain;
    chain.reserve(n);
    KeyBlock current{0, mk.bytes()};
    for (std::size_t i = 0; i < n; ++i) {
        current = next_key_block(current, stream);
        chain.push_back(current);
    }
    return chain;
}

RuleVector rule_vector(const KeyBlock& key, const ChaoticStream& stream) {
    RuleVector rules;
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        rules[i] = Rule(static_cast<int>(scaled_term(key.bytes, i, stream.xs[i]) % 8u) + 1);
    }
    return rules;
}

Block substitute_block(const Block& plain, const KeyBlock& key, const RuleVector& rules) {
    Block out{};
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        const Rule r = rules[i];
        out[i] = dna_decode(dna_xor(dna_encode(plain[i], r), dna_encode(key.bytes[i], r), r), r);
    }
    return out;
}

Block encrypt_block(const Block& plain, const KeyBlock& key, const ChaoticStream& stream) {
    const Block substituted = substitute_block(plain, key, rule_vector(key, stream));
    return apply_shuffle(substituted, build_shuffle_map(key.bytes));
}

Block decrypt_block(const Block& cipher, const KeyBlock& key, const ChaoticStream& stream) {
    const Block unshuffled = apply_shuffle(cipher, build_shuffle_map(key.bytes));
    return substitute_block(unshuffled, key, rule_vector(key, stream));
}

ByteStream encrypt_stream(const MasterKey& mk, std::span<const std::uint8_t> plain) {
    ByteStream out;
    out.original_length = plain.size();
    out.data.assign(padded_length(plain.size()), 0);

    const ChaoticStream stream = mk.stream();
    KeyBlock key{0, mk.bytes()};
    for (std::size_t offset = 0; offset < out.data.size(); offset += kBlockSize) {
        key = next_key_block(key, stream);
        Block block{};
        const std::size_t take = std::min(kBlockSize, plain.size() - offset);
        std::copy_n(plain.begin() + static_cast<std::ptrdiff_t>(offset), take, block.begin());
        const Block cipher = encrypt_block(block, key, stream);
        std::copy(cipher.begin(), cipher.end(), out.data.begin() + static_cast<std::ptrdiff_t>(offset));
    }
    return out;
}

Bytes decrypt_stream(const MasterKey& mk, const ByteStream& cipher) {
    if (cipher.data.size() % kBlockSize != 0) {
        throw Error(ErrorCode::MalformedStream, "cipher payload of " +
                                                    std::to_string(cipher.data.size()) +
                                                    " bytes is not block-aligned");
    }
    if (cipher.original_length > cipher.data.size() ||
        padded_length(static_cast<std::size_t>(cipher.original_length)) != cipher.data.size()) {
        throw Error(ErrorCode::MalformedStream,
                    "original length " + std::to_string(cipher.original_length) +
                        " does not match a payload of " + std::to_string(cipher.data.size()) +
                        " bytes");
    }

    Bytes plain(cipher.data.size());
    const ChaoticStream stream = mk.stream();
    KeyBlock key{0, mk.bytes()};
    for (std::size_t offset = 0; offset < cipher.data.size(); offset += kBlockSize) {
        key = next_key_block(key, stream);
        Block block{};
        std::copy_n(cipher.data.begin() + static_cast<std::ptrdiff_t>(offset), kBlockSize,
                    block.begin());
        const Block out = decrypt_block(block, key, stream);
        std::copy(out.begin(), out.end(), plain.begin() + static_cast<std::ptrdiff_t>(offset));
    }
    plain.resize(static_cast<std::size_t>(cipher.original_length));
    return plain;
}

}  // namespace decsau
