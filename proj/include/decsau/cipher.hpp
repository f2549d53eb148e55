#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "decsau/block.hpp"
#include "decsau/dna.hpp"
#include "decsau/shuffle.hpp"

namespace decsau {

inline constexpr double kLogisticLambda = 3.99;
/// Largest possible key-weighted sum: 255 * (2 + 3 + ... + 33).
inline constexpr std::uint32_t kMaxKeyWeight = 142800;
inline constexpr double kKeyWeightScale = 2097152.0;  // 2^21

/// Initial condition of the logistic map from the 32 master-key bytes:
/// sum of mk[j] * (j + 1) over 1-based j, divided by 2^21. The sum is exact
/// integer arithmetic; the single division is the only rounding step.
/// Throws Error(DegenerateKey) when the result is zero.
double derive_x0(std::span<const std::uint8_t, kBlockSize> mk);

/// x0 plus the 32 iterates x_j = (3.99 * x_{j-1}) * (1 - x_{j-1}).
struct ChaoticStream {
    double x0 = 0.0;
    std::array<double, kBlockSize> xs{};  // xs[j-1] holds x_j

    double at(std::size_t j) const { return xs.at(j - 1); }
};

/// Throws Error(DomainError) unless 0 < x0 < 1.
ChaoticStream logistic_stream(double x0);

/// A 32-byte user secret whose derived x0 is non-zero.
class MasterKey {
public:
    /// Throws Error(InvalidArgument) on wrong length, Error(DegenerateKey)
    /// for the all-zero key.
    static MasterKey from_bytes(std::span<const std::uint8_t> bytes);

    const Block& bytes() const noexcept { return bytes_; }
    double x0() const noexcept { return x0_; }
    /// The stream shared by every block encrypted under this key.
    ChaoticStream stream() const { return logistic_stream(x0_); }

private:
    MasterKey(const Block& bytes, double x0) : bytes_(bytes), x0_(x0) {}

    Block bytes_;
    double x0_;
};

struct KeyBlock {
    std::size_t index = 0;  // 0 for the master key itself
    Block bytes{};

    friend bool operator==(const KeyBlock&, const KeyBlock&) = default;
};

/// One key-chaining step. For each 1-based j (with prev(0) := prev(1)):
///   raw = floor(x_j * (prev(j)^2 + prev(j-1))) mod 256
///   out(j) = raw                 if raw != prev(j)
///          = floor(x_j * 256)    otherwise
KeyBlock next_key_block(const KeyBlock& prev, const ChaoticStream& stream);

/// K_1..K_n derived from K_0 = mk.
std::vector<KeyBlock> key_chain(const MasterKey& mk, std::size_t n);

using RuleVector = std::array<Rule, kBlockSize>;

/// r_j = (floor(x_j * (k(j)^2 + k(j-1))) mod 8) + 1, with k(0) := k(1).
RuleVector rule_vector(const KeyBlock& key, const ChaoticStream& stream);

/// S(j) = decode(encode(b(j)) xor_dna encode(k(j))) under rule r_j.
Block substitute_block(const Block& plain, const KeyBlock& key, const RuleVector& rules);

Block encrypt_block(const Block& plain, const KeyBlock& key, const ChaoticStream& stream);
Block decrypt_block(const Block& cipher, const KeyBlock& key, const ChaoticStream& stream);

/// Zero-padded cipher payload together with the unpadded length.
struct ByteStream {
    Bytes data;
    std::uint64_t original_length = 0;
};

ByteStream encrypt_stream(const MasterKey& mk, std::span<const std::uint8_t> plain);

/// Throws Error(MalformedStream) when data is not block-aligned or
/// original_length does not pad to exactly data.size().
Bytes decrypt_stream(const MasterKey& mk, const ByteStream& cipher);

}  // namespace decsau
