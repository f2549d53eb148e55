#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace decsau {

struct Spectrum {
    double bin_hz = 0.0;
    std::vector<double> magnitudes;  // floor(N/2) + 1 bins

    std::size_t peak_bin() const;
    double peak_hz() const { return static_cast<double>(peak_bin()) * bin_hz; }
};

/// |DFT| of the signal centered at 128. Direct O(N^2) transform over an
/// exact twiddle table, any N >= 2 (else Error(DomainError)).
Spectrum magnitude_spectrum(std::span<const std::uint8_t> samples, std::uint32_t sample_rate);

std::array<std::uint64_t, 256> byte_histogram(std::span<const std::uint8_t> bytes);

/// Bits per byte; Error(DomainError) on empty input.
double shannon_entropy(std::span<const std::uint8_t> bytes);

struct Correlation {
    double value = 0.0;
    /// One of the two series has zero variance; value is reported as 0.
    bool degenerate = false;
};

/// Pearson correlation of (x[n], x[n+1]). Error(DomainError) for fewer than
/// two bytes.
Correlation adjacent_correlation(std::span<const std::uint8_t> bytes);

/// 9 significant digits, the format used in every CSV the tools emit.
std::string format_real(double value);

std::string time_csv(std::span<const std::uint8_t> samples);
std::string spectrum_csv(const Spectrum& spectrum);
std::string stats_csv(std::span<const std::uint8_t> samples, std::uint32_t sample_rate);

}  // namespace decsau
