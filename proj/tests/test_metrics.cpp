#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "decsau/audio.hpp"
#include "decsau/cipher.hpp"
#include "decsau/error.hpp"
#include "decsau/metrics.hpp"
#include "test_support.hpp"

using namespace decsau;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no decsau::Error thrown";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Spectrum, SilenceIsFlatZero) {
    const Spectrum s = magnitude_spectrum(Bytes(100, 128), 8000);
    ASSERT_EQ(s.magnitudes.size(), 51u);
    EXPECT_DOUBLE_EQ(s.bin_hz, 80.0);
    for (double m : s.magnitudes) EXPECT_EQ(m, 0.0);
}

TEST(Spectrum, ConstantOffsetOnlyInDc) {
    const Spectrum s = magnitude_spectrum(Bytes(64, 138), 8000);
    EXPECT_NEAR(s.magnitudes[0], 640.0, 1e-9);
    for (std::size_t k = 1; k < s.magnitudes.size(); ++k) EXPECT_NEAR(s.magnitudes[k], 0.0, 1e-9);
    EXPECT_EQ(s.peak_bin(), 0u);
}

TEST(Spectrum, SinePeakAt700Hz) {
    const AudioClip sine = synthesize_sine(700.0, 8000, 8000, 100);
    const Spectrum s = magnitude_spectrum(sine.samples, 8000);
    EXPECT_DOUBLE_EQ(s.bin_hz, 1.0);
    EXPECT_EQ(s.peak_bin(), 700u);
    EXPECT_DOUBLE_EQ(s.peak_hz(), 700.0);
    // Amplitude A over N samples gives A*N/2 at the peak, up to rounding noise.
    EXPECT_NEAR(s.magnitudes[700], 100.0 * 8000 / 2, 400.0);
}

TEST(Spectrum, ParsevalHolds) {
    std::mt19937_64 rng(50);
    for (std::size_t n : {2u, 17u, 64u, 255u, 1000u}) {
        const Bytes x = test::random_bytes(rng, n);
        const Spectrum s = magnitude_spectrum(x, 8000);
        double time_energy = 0.0;
        for (auto v : x) time_energy += (v - 128.0) * (v - 128.0);
        // Full spectrum energy from the one-sided half: bins 1..ceil(N/2)-1
        // appear twice, DC and (for even N) Nyquist once.
        double freq_energy = 0.0;
        for (std::size_t k = 0; k < s.magnitudes.size(); ++k) {
            const bool single = k == 0 || (n % 2 == 0 && k == n / 2);
            freq_energy += (single ? 1.0 : 2.0) * s.magnitudes[k] * s.magnitudes[k];
        }
        freq_energy /= static_cast<double>(n);
        EXPECT_NEAR(freq_energy, time_energy, 1e-6 * time_energy) << "N=" << n;
    }
}

TEST(Spectrum, TonePeakProperty) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t bin = 1 + rng() % 999;
        const AudioClip sine = synthesize_sine(static_cast<double>(bin), 2000, 2000, 60 + static_cast<int>(rng() % 60));
        EXPECT_EQ(magnitude_spectrum(sine.samples, 2000).peak_bin(), bin);
    }
}

TEST(Spectrum, TooShort) {
    EXPECT_EQ(code_of([] { magnitude_spectrum(Bytes(1, 5), 8000); }), ErrorCode::DomainError);
    EXPECT_EQ(code_of([] { magnitude_spectrum(Bytes{}, 8000); }), ErrorCode::DomainError);
}

TEST(Entropy, UniformAndConstant) {
    Bytes all(256);
    std::iota(all.begin(), all.end(), std::uint8_t{0});
    EXPECT_DOUBLE_EQ(shannon_entropy(all), 8.0);
    EXPECT_EQ(shannon_entropy(Bytes(77, 9)), 0.0);
    EXPECT_DOUBLE_EQ(shannon_entropy(Bytes{1, 2}), 1.0);
    EXPECT_EQ(code_of([] { shannon_entropy(Bytes{}); }), ErrorCode::DomainError);
}

TEST(Entropy, Histogram) {
    const auto h = byte_histogram(Bytes{1, 1, 255, 0});
    EXPECT_EQ(h[0], 1u);
    EXPECT_EQ(h[1], 2u);
    EXPECT_EQ(h[255], 1u);
    EXPECT_EQ(std::accumulate(h.begin(), h.end(), std::uint64_t{0}), 4u);
}

TEST(Entropy, CipherIsHighAndPlainIsLow) {
    const MasterKey mk = MasterKey::from_bytes(test::kCpaDemoKey);
    const AudioClip sine = synthesize_sine(700.0, 8000, 8000, 100);
    const ByteStream c = encrypt_stream(mk, sine.samples);
    EXPECT_LT(shannon_entropy(sine.samples), 7.9);
    EXPECT_GT(shannon_entropy(c.data), 7.9);
}

TEST(Correlation, Ramp) {
    Bytes ramp(200);
    std::iota(ramp.begin(), ramp.end(), std::uint8_t{0});
    const Correlation c = adjacent_correlation(ramp);
    EXPECT_FALSE(c.degenerate);
    EXPECT_NEAR(c.value, 1.0, 1e-9);
}

TEST(Correlation, Alternating) {
    Bytes alt(100);
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2 ? 200 : 10;
    EXPECT_NEAR(adjacent_correlation(alt).value, -1.0, 1e-9);
}

TEST(Correlation, ConstantIsDegenerate) {
    const Correlation c = adjacent_correlation(Bytes(50, 3));
    EXPECT_TRUE(c.degenerate);
    EXPECT_EQ(c.value, 0.0);
    EXPECT_EQ(code_of([] { adjacent_correlation(Bytes(1, 3)); }), ErrorCode::DomainError);
}

TEST(Correlation, HandExample) {
    // pairs (1,2),(2,4),(4,3): x mean 7/3, y mean 3
    const Correlation c = adjacent_correlation(Bytes{1, 2, 4, 3});
    const double sxy = (-4.0 / 3) * -1 + (-1.0 / 3) * 1 + (5.0 / 3) * 0;
    const double sxx = 16.0 / 9 + 1.0 / 9 + 25.0 / 9;
    const double syy = 2.0;
    EXPECT_NEAR(c.value, sxy / std::sqrt(sxx * syy), 1e-12);
}

TEST(Csv, TimeSeries) {
    EXPECT_EQ(time_csv(Bytes{128, 0, 255}), "index,sample\n0,128\n1,0\n2,255\n");
}

TEST(Csv, SpectrumRows) {
    const Spectrum s = magnitude_spectrum(Bytes{138, 118}, 2);
    EXPECT_EQ(spectrum_csv(s), "hz,magnitude\n0,0\n1,20\n");
}

TEST(Csv, Stats) {
    Bytes x{128, 138, 128, 118};
    const std::string csv = stats_csv(x, 4);
    EXPECT_EQ(csv,
              "name,value\n"
              "samples,4\n"
              "sample_rate,4\n"
              "entropy_bits,1.5\n"
              "adjacent_correlation," + format_real(adjacent_correlation(x).value) + "\n"
              "correlation_degenerate,0\n"
              "peak_hz,1\n");
}

TEST(Csv, RealFormatting) {
    EXPECT_EQ(format_real(0.0), "0");
    EXPECT_EQ(format_real(8.0), "8");
    EXPECT_EQ(format_real(1.0 / 3), "0.333333333");
    EXPECT_EQ(format_real(-0.5), "-0.5");
}
