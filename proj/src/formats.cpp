#include "decsau/formats.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "decsau/error.hpp"

namespace decsau {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// Non-empty, non-comment lines.
std::vector<std::string_view> records(std::string_view text) {
    std::vector<std::string_view> out;
    for (auto line : split(text, '\n')) {
        if (line.empty() || line.front() == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::size_t parse_index(std::string_view s) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::InvalidArgument, "not an integer: " + std::string(s));
    }
    return value;
}

Block parse_block_hex(std::string_view s) {
    const Bytes bytes = from_hex(s);
    if (bytes.size() != kBlockSize) {
        throw Error(ErrorCode::InvalidArgument, "expected 64 hex characters: " + std::string(s));
    }
    Block out{};
    std::copy(bytes.begin(), bytes.end(), out.begin());
    return out;
}

template <typename Range>
std::string join_positions(const Range& positions) {
    std::string out;
    for (auto p : positions) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xF]);
    }
    return out;
}

Bytes from_hex(std::string_view text) {
    if (text.size() % 2 != 0) {
        throw Error(ErrorCode::InvalidArgument, "hex string has odd length");
    }
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    Bytes out(text.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = nibble(text[2 * i]);
        const int lo = nibble(text[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw Error(ErrorCode::InvalidArgument, "invalid hex character");
        }
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

std::string format_key_file(const MasterKey& mk) {
    return to_hex(mk.bytes()) + "\n";
}

MasterKey parse_key_text(std::string_view text) {
    const std::string_view hex = trim(text);
    if (hex.size() != 2 * kBlockSize) {
        throw Error(ErrorCode::InvalidArgument,
                    "key must be 64 hex characters, got " + std::to_string(hex.size()));
    }
    return MasterKey::from_bytes(from_hex(hex));
}

std::vector<GoldenVector> parse_golden_vectors(std::string_view text) {
    std::vector<GoldenVector> out;
    for (auto line : records(text)) {
        const auto fields = split(line, ',');
        if (fields.size() != 4) {
            throw Error(ErrorCode::InvalidArgument, "golden vector needs 4 fields: " + std::string(line));
        }
        GoldenVector v;
        v.master_key = parse_block_hex(fields[0]);
        v.block_index = parse_index(fields[1]);
        v.plain = parse_block_hex(fields[2]);
        v.cipher = parse_block_hex(fields[3]);
        out.push_back(v);
    }
    return out;
}

std::string format_golden_vectors(std::span<const GoldenVector> vectors) {
    std::string out;
    for (const auto& v : vectors) {
        out += to_hex(v.master_key) + ", " + std::to_string(v.block_index) + ", " + to_hex(v.plain) +
               ", " + to_hex(v.cipher) + "\n";
    }
    return out;
}

std::string format_equivalent_key(const EquivalentKey& key) {
    std::string out;
    std::size_t index = 1;
    for (const auto& entry : key.entries()) {
        out += std::to_string(index++) + ", " + to_hex(entry.key) + ", " +
               join_positions(entry.shuffle.rc()) + ", " + join_positions(entry.shuffle.lc()) + "\n";
    }
    return out;
}

EquivalentKey parse_equivalent_key(std::string_view text) {
    constexpr std::size_t half = kBlockSize / 2;
    std::vector<EquivalentKeyEntry> entries;
    for (auto line : records(text)) {
        const auto fields = split(line, ',');
        if (fields.size() != 2 + kBlockSize) {
            throw Error(ErrorCode::InvalidArgument,
                        "equivalent key line needs index, key and 32 positions: " + std::string(line));
        }
        if (parse_index(fields[0]) != entries.size() + 1) {
            throw Error(ErrorCode::InvalidArgument, "equivalent key lines out of order");
        }
        ShuffleMap::Channel rc{};
        ShuffleMap::Channel lc{};
        for (std::size_t k = 0; k < half; ++k) {
            const std::size_t odd = parse_index(fields[2 + k]);
            const std::size_t even = parse_index(fields[2 + half + k]);
            if (odd > kBlockSize || even > kBlockSize) {
                throw Error(ErrorCode::InvalidArgument, "position out of range");
            }
            rc[k] = static_cast<std::uint8_t>(odd);
            lc[k] = static_cast<std::uint8_t>(even);
        }
        entries.push_back({parse_block_hex(fields[1]), ShuffleMap::from_channels(rc, lc)});
    }
    return EquivalentKey(std::move(entries));
}

std::string format_key_blocks(std::span<const KeyBlock> blocks) {
    std::string out;
    for (const auto& block : blocks) {
        out += std::to_string(block.index) + ", " + to_hex(block.bytes) + "\n";
    }
    return out;
}

}  // namespace decsau
