#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "decsau/block.hpp"

namespace decsau {

/// Pairing of the 16 odd positions (right channel) with the 16 even
/// positions (left channel) of a block. Positions are 1-based. The induced
/// permutation swaps rc[k] with lc[k], so it is an involution with no fixed
/// points.
class ShuffleMap {
public:
    using Channel = std::array<std::uint8_t, kBlockSize / 2>;

    /// Validates that rc holds 16 distinct odd positions and lc 16 distinct
    /// even positions in 1..32. Throws Error(InvalidArgument) otherwise.
    static ShuffleMap from_channels(std::span<const std::uint8_t> rc,
                                    std::span<const std::uint8_t> lc);

    const Channel& rc() const noexcept { return rc_; }
    const Channel& lc() const noexcept { return lc_; }

    /// f(position), 1-based in and out.
    std::size_t image(std::size_t position) const;

    /// Equal when the induced permutations agree; channel order is ignored.
    friend bool operator==(const ShuffleMap& a, const ShuffleMap& b) noexcept {
        return a.partner_ == b.partner_;
    }

private:
    ShuffleMap() = default;

    Channel rc_{};
    Channel lc_{};
    std::array<std::uint8_t, kBlockSize> partner_{};  // 0-based
};

/// Channel index generation driven by the key block bytes, in key order:
/// each byte probes slot (byte mod 32), stepping forward until it finds an
/// unused slot t; even t feeds the right channel with t+1, odd t the left.
ShuffleMap build_shuffle_map(std::span<const std::uint8_t, kBlockSize> key);

/// out[j] = in[f(j)].
Block apply_shuffle(const Block& in, const ShuffleMap& map) noexcept;

}  // namespace decsau
