#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace decsau {

enum class Nucleotide : std::uint8_t { A, T, G, C };

char to_char(Nucleotide n) noexcept;

/// One of the eight nucleotide <-> bit-pair tables, numbered 1..8.
class Rule {
public:
    Rule() noexcept = default;
    /// Throws Error(InvalidArgument) outside 1..8.
    explicit Rule(int id);

    int id() const noexcept { return id_; }

    /// Two-bit value this rule assigns to a nucleotide.
    std::uint8_t bits_of(Nucleotide n) const noexcept;
    /// Nucleotide carrying a two-bit value under this rule.
    Nucleotide nucleotide_of(std::uint8_t bits) const noexcept;

    friend bool operator==(Rule, Rule) = default;

private:
    int id_ = 1;
};

/// N4 N3 N2 N1, stored in that order: element 0 carries bits 7..6.
using NucleotideQuad = std::array<Nucleotide, 4>;

std::string to_string(const NucleotideQuad& q);
/// Parses "ACGT"-style text; throws Error(InvalidArgument) on anything else.
NucleotideQuad quad_from_string(const std::string& text);

NucleotideQuad dna_encode(std::uint8_t value, Rule rule) noexcept;
std::uint8_t dna_decode(const NucleotideQuad& quad, Rule rule) noexcept;

/// Nucleotide-wise XOR under a rule: decode both operands, XOR the bit
/// pairs, encode the result with the same rule.
Nucleotide dna_xor(Nucleotide a, Nucleotide b, Rule rule) noexcept;
NucleotideQuad dna_xor(const NucleotideQuad& a, const NucleotideQuad& b, Rule rule) noexcept;

}  // namespace decsau
