#include "decsau/dna.hpp"

#include "decsau/error.hpp"

namespace decsau {
namespace {

// Bit pair carried by A, T, G, C (enum order) for rules 1..8.
constexpr std::uint8_t kRuleTable[8][4] = {
    {0b00, 0b11, 0b10, 0b01},
    {0b00, 0b11, 0b01, 0b10},
    {0b11, 0b00, 0b10, 0b01},
    {0b11, 0b00, 0b01, 0b10},
    {0b10, 0b01, 0b00, 0b11},
    {0b10, 0b01, 0b11, 0b00},
    {0b01, 0b10, 0b00, 0b11},
    {0b01, 0b10, 0b11, 0b00},
};

}  // namespace

char to_char(Nucleotide n) noexcept {
    switch (n) {
        case Nucleotide::A: return 'A';
        case Nucleotide::T: return 'T';
        case Nucleotide::G: return 'G';
        case Nucleotide::C: return 'C';
    }
    return '?';
}

Rule::Rule(int id) : id_(id) {
    if (id < 1 || id > 8) {
        throw Error(ErrorCode::InvalidArgument, "DNA rule must be in 1..8, got " + std::to_string(id));
    }
}

std::uint8_t Rule::bits_of(Nucleotide n) const noexcept {
    return kRuleTable[id_ - 1][static_cast<int>(n)];
}

Nucleotide Rule::nucleotide_of(std::uint8_t bits) const noexcept {
    const auto& row = kRuleTable[id_ - 1];
    for (int n = 0; n < 4; ++n) {
        if (row[n] == (bits & 3u)) return static_cast<Nucleotide>(n);
    }
    return Nucleotide::A;  // unreachable: every row is a bijection
}

std::string to_string(const NucleotideQuad& q) {
    std::string out;
    for (auto n : q) out.push_back(to_char(n));
    return out;
}

NucleotideQuad quad_from_string(const std::string& text) {
    if (text.size() != 4) {
        throw Error(ErrorCode::InvalidArgument, "nucleotide quad needs 4 symbols: " + text);
    }
    NucleotideQuad q{};
    for (std::size_t i = 0; i < 4; ++i) {
        switch (text[i]) {
            case 'A': q[i] = Nucleotide::A; break;
            case 'T': q[i] = Nucleotide::T; break;
            case 'G': q[i] = Nucleotide::G; break;
            case 'C': q[i] = Nucleotide::C; break;
            default:
                throw Error(ErrorCode::InvalidArgument, "not a nucleotide quad: " + text);
        }
    }
    return q;
}

NucleotideQuad dna_encode(std::uint8_t value, Rule rule) noexcept {
    return {rule.nucleotide_of(static_cast<std::uint8_t>(value >> 6)),
            rule.nucleotide_of(static_cast<std::uint8_t>(value >> 4)),
            rule.nucleotide_of(static_cast<std::uint8_t>(value >> 2)),
            rule.nucleotide_of(value)};
}

std::uint8_t dna_decode(const NucleotideQuad& quad, Rule rule) noexcept {
    return static_cast<std::uint8_t>((rule.bits_of(quad[0]) << 6) | (rule.bits_of(quad[1]) << 4) |
                                     (rule.bits_of(quad[2]) << 2) | rule.bits_of(quad[3]));
}

Nucleotide dna_xor(Nucleotide a, Nucleotide b, Rule rule) noexcept {
    return rule.nucleotide_of(static_cast<std::uint8_t>(rule.bits_of(a) ^ rule.bits_of(b)));
}

NucleotideQuad dna_xor(const NucleotideQuad& a, const NucleotideQuad& b, Rule rule) noexcept {
    return {dna_xor(a[0], b[0], rule), dna_xor(a[1], b[1], rule), dna_xor(a[2], b[2], rule),
            dna_xor(a[3], b[3], rule)};
}

}  // namespace decsau
