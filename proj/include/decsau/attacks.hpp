#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "decsau/block.hpp"
#include "decsau/cipher.hpp"
#include "decsau/shuffle.hpp"

namespace decsau {

/// Black-box access to a cipher direction under a hidden key. The attack
/// code only ever sees the transform; every call is counted.
class Oracle {
public:
    using Transform = std::function<Bytes(std::span<const std::uint8_t>)>;

    explicit Oracle(Transform transform) : transform_(std::move(transform)) {}

    /// Throws Error(OracleFailure) when the reply length differs from the
    /// query length (all queries issued by the attacks are block-aligned).
    Bytes query(std::span<const std::uint8_t> input);

    std::size_t query_count() const noexcept { return queries_; }

private:
    Transform transform_;
    std::size_t queries_ = 0;
};

class EncryptionOracle : public Oracle {
public:
    using Oracle::Oracle;

    /// In-process oracle over encrypt_stream; the key is captured and not
    /// reachable through the oracle.
    static EncryptionOracle simulated(const MasterKey& mk);
};

class DecryptionOracle : public Oracle {
public:
    using Oracle::Oracle;

    /// In-process oracle treating its input as a whole number of blocks.
    static DecryptionOracle simulated(const MasterKey& mk);
};

struct EquivalentKeyEntry {
    Block key{};
    ShuffleMap shuffle;
};

/// Per-block material sufficient to decrypt without the master key.
class EquivalentKey {
public:
    EquivalentKey() = default;
    explicit EquivalentKey(std::vector<EquivalentKeyEntry> entries)
        : entries_(std::move(entries)) {}

    std::size_t block_count() const noexcept { return entries_.size(); }
    const std::vector<EquivalentKeyEntry>& entries() const noexcept { return entries_; }

private:
    std::vector<EquivalentKeyEntry> entries_;
};

/// P1: n_blocks * 32 zero bytes. P2: the pattern 1, 2, ..., 32 repeated per
/// block, so the per-block plaintext difference at position j is j.
std::pair<Bytes, Bytes> craft_cpa_plaintexts(std::size_t n_blocks);

/// Reads the involution off one block of C1 xor C2: position j pulls from
/// position delta[j]. Throws Error(InconsistentDelta) unless delta is a
/// permutation of 1..32 that pairs every odd position with an even one.
ShuffleMap recover_shuffle_map(const Block& delta);

/// C1 is the shuffled key block, so one more application of the map
/// returns it.
Block recover_key_block(const Block& zero_cipher, const ShuffleMap& map) noexcept;

struct CpaResult {
    EquivalentKey key;
    Bytes plaintext;
};

/// Two chosen plaintexts sized to the target. Throws Error(LengthMismatch)
/// for an empty or unaligned target, Error(InconsistentDelta) when the
/// oracle does not behave like this cipher.
CpaResult differential_cpa(EncryptionOracle& oracle, std::span<const std::uint8_t> target);

/// Key chain continuation from a known K_1. Requires the chaotic stream,
/// which is derived from the master key, so this only serves white-box
/// checks.
std::vector<Block> extend_key_chain(const Block& k1, const ChaoticStream& stream, std::size_t n);

/// One all-zero ciphertext of n_blocks blocks; the reply is K_1..K_n.
std::vector<KeyBlock> chosen_ciphertext_attack(DecryptionOracle& oracle, std::size_t n_blocks);

/// Re-encrypts the target three times. Throws Error(LengthMismatch) for an
/// unaligned target.
Bytes cycle_attack(EncryptionOracle& oracle, std::span<const std::uint8_t> target);

/// Per block: apply the map once, then XOR the key block. Throws
/// Error(LengthMismatch) when the ciphertext is unaligned or longer than the
/// key covers.
Bytes decrypt_with_equivalent_key(const EquivalentKey& key, std::span<const std::uint8_t> cipher);

}  // namespace decsau
