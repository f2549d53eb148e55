#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decsau/attacks.hpp"
#include "decsau/block.hpp"
#include "decsau/cipher.hpp"

namespace decsau {

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts either case. Throws Error(InvalidArgument) on odd length or
/// non-hex characters.
Bytes from_hex(std::string_view text);

/// Key file: 64 lowercase hex characters and a newline.
std::string format_key_file(const MasterKey& mk);
/// Surrounding whitespace is ignored.
MasterKey parse_key_text(std::string_view text);

/// `MK_hex, block_index, plain_hex, cipher_hex`; '#' starts a comment line.
struct GoldenVector {
    Block master_key{};
    std::size_t block_index = 0;
    Block plain{};
    Block cipher{};
};

std::vector<GoldenVector> parse_golden_vectors(std::string_view text);
std::string format_golden_vectors(std::span<const GoldenVector> vectors);

/// One line per block: `index, key_hex, rc_csv, lc_csv`, index 1-based.
std::string format_equivalent_key(const EquivalentKey& key);
/// Lines must be numbered 1, 2, ... in order. Throws Error(InvalidArgument).
EquivalentKey parse_equivalent_key(std::string_view text);

/// One line per block: `index, key_hex`.
std::string format_key_blocks(std::span<const KeyBlock> blocks);

}  // namespace decsau
