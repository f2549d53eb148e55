#include "decsau/shuffle.hpp"

#include <string>

#include "decsau/error.hpp"

namespace decsau {

ShuffleMap ShuffleMap::from_channels(std::span<const std::uint8_t> rc,
                                     std::span<const std::uint8_t> lc) {
    constexpr std::size_t half = kBlockSize / 2;
    if (rc.size() != half || lc.size() != half) {
        throw Error(ErrorCode::InvalidArgument, "shuffle channels must hold 16 positions each");
    }
    ShuffleMap map;
    std::array<bool, kBlockSize> seen{};
    for (std::size_t k = 0; k < half; ++k) {
        const std::uint8_t odd = rc[k];
        const std::uint8_t even = lc[k];
        if (odd < 1 || odd > kBlockSize || odd % 2 != 1 || even < 1 || even > kBlockSize ||
            even % 2 != 0) {
            throw Error(ErrorCode::InvalidArgument,
                        "bad channel pair " + std::to_string(odd) + "/" + std::to_string(even));
        }
        if (seen[odd - 1] || seen[even - 1]) {
            throw Error(ErrorCode::InvalidArgument, "channel position repeated");
        }
        seen[odd - 1] = seen[even - 1] = true;
        map.rc_[k] = odd;
        map.lc_[k] = even;
        map.partner_[odd - 1] = static_cast<std::uint8_t>(even - 1);
        map.partner_[even - 1] = static_cast<std::uint8_t>(odd - 1);
    }
    return map;
}

std::size_t ShuffleMap::image(std::size_t position) const {
    if (position < 1 || position > kBlockSize) {
        throw Error(ErrorCode::InvalidArgument, "position out of range: " + std::to_string(position));
    }
    return partner_[position - 1] + 1u;
}

ShuffleMap build_shuffle_map(std::span<const std::uint8_t, kBlockSize> key) {
    std::array<bool, kBlockSize> used{};
    Block rc{};
    Block lc{};
    std::size_t n_rc = 0;
    std::size_t n_lc = 0;
    for (const std::uint8_t byte : key) {
        unsigned element = byte;
        std::size_t t = 0;
        do {
            t = element % kBlockSize;
            ++element;
        } while (used[t]);
        if (t % 2 == 0) {
            rc[n_rc++] = static_cast<std::uint8_t>(t + 1);
        } else {
            lc[n_lc++] = static_cast<std::uint8_t>(t + 1);
        }
        used[t] = true;
    }
    // 32 bytes claim 32 distinct slots, so each channel ends with 16 entries.
    return ShuffleMap::from_channels(std::span(rc).first(n_rc), std::span(lc).first(n_lc));
}

Block apply_shuffle(const Block& in, const ShuffleMap& map) noexcept {
    Block out{};
    for (std::size_t k = 0; k < kBlockSize / 2; ++k) {
        const std::size_t odd = map.rc()[k] - 1u;
        const std::size_t even = map.lc()[k] - 1u;
        out[odd] = in[even];
        out[even] = in[odd];
    }
    return out;
}

}  // namespace decsau
