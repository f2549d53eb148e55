#include "decsau/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "decsau/error.hpp"

namespace decsau {

std::size_t Spectrum::peak_bin() const {
    if (magnitudes.empty()) {
        throw Error(ErrorCode::DomainError, "empty spectrum");
    }
    return static_cast<std::size_t>(std::max_element(magnitudes.begin(), magnitudes.end()) -
                                    magnitudes.begin());
}

Spectrum magnitude_spectrum(std::span<const std::uint8_t> samples, std::uint32_t sample_rate) {
    const std::size_t n = samples.size();
    if (n < 2) {
        throw Error(ErrorCode::DomainError, "spectrum needs at least two samples");
    }
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = static_cast<double>(samples[i]) - 128.0;

    // cos/sin of 2*pi*m/N; index k*i mod N keeps every twiddle exact.
    std::vector<double> cos_table(n);
    std::vector<double> sin_table(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        cos_table[m] = std::cos(angle);
        sin_table[m] = std::sin(angle);
    }

    Spectrum spectrum;
    spectrum.bin_hz = static_cast<double>(sample_rate) / static_cast<double>(n);
    spectrum.magnitudes.resize(n / 2 + 1);
    for (std::size_t k = 0; k < spectrum.magnitudes.size(); ++k) {
        double re = 0.0;
        double im = 0.0;
        std::size_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            re += centered[i] * cos_table[m];
            im -= centered[i] * sin_table[m];
            m += k;
            if (m >= n) m -= n;
        }
        spectrum.magnitudes[k] = std::hypot(re, im);
    }
    return spectrum;
}

std::array<std::uint64_t, 256> byte_histogram(std::span<const std::uint8_t> bytes) {
    std::array<std::uint64_t, 256> counts{};
    for (auto b : bytes) ++counts[b];
    return counts;
}

double shannon_entropy(std::span<const std::uint8_t> bytes) {
    if (bytes.empty()) {
        throw Error(ErrorCode::DomainError, "entropy of an empty sequence");
    }
    const auto counts = byte_histogram(bytes);
    const double total = static_cast<double>(bytes.size());
    double entropy = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        entropy -= p * std::log2(p);
    }
    return entropy;
}

Correlation adjacent_correlation(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2) {
        throw Error(ErrorCode::DomainError, "correlation needs at least two bytes");
    }
    const std::size_t pairs = bytes.size() - 1;
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        mean_x += bytes[i];
        mean_y += bytes[i + 1];
    }
    mean_x /= static_cast<double>(pairs);
    mean_y /= static_cast<double>(pairs);

    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const double dx = bytes[i] - mean_x;
        const double dy = bytes[i + 1] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return {0.0, true};
    }
    return {std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0), false};
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::string time_csv(std::span<const std::uint8_t> samples) {
    std::string out = "index,sample\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(samples[i]);
        out += '\n';
    }
    return out;
}

std::string spectrum_csv(const Spectrum& spectrum) {
    std::string out = "hz,magnitude\n";
    for (std::size_t k = 0; k < spectrum.magnitudes.size(); ++k) {
        out += format_real(static_cast<double>(k) * spectrum.bin_hz);
        out += ',';
        out += format_real(spectrum.magnitudes[k]);
        out += '\n';
    }
    return out;
}

std::string stats_csv(std::span<const std::uint8_t> samples, std::uint32_t sample_rate) {
    const Correlation corr = adjacent_correlation(samples);
    const Spectrum spectrum = magnitude_spectrum(samples, sample_rate);
    std::string out = "name,value\n";
    out += "samples," + std::to_string(samples.size()) + "\n";
    out += "sample_rate," + std::to_string(sample_rate) + "\n";
    out += "entropy_bits," + format_real(shannon_entropy(samples)) + "\n";
    out += "adjacent_correlation," + format_real(corr.value) + "\n";
    out += std::string("correlation_degenerate,") + (corr.degenerate ? "1" : "0") + "\n";
    out += "peak_hz," + format_real(spectrum.peak_hz()) + "\n";
    return out;
}

}  // namespace decsau
