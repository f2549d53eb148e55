#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace decsau {

inline constexpr std::size_t kBlockSize = 32;

/// 32 bytes; position j of the domain model lives at index j-1.
using Block = std::array<std::uint8_t, kBlockSize>;
using Bytes = std::vector<std::uint8_t>;

inline Block xor_blocks(const Block& a, const Block& b) noexcept {
    Block out{};
    for (std::size_t i = 0; i < kBlockSize; ++i) {
        out[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
    }
    return out;
}

inline std::size_t padded_length(std::size_t length) noexcept {
    return (length + kBlockSize - 1) / kBlockSize * kBlockSize;
}

}  // namespace decsau
