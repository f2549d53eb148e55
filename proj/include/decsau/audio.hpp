#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "decsau/block.hpp"

namespace decsau {

/// Mono unsigned 8-bit PCM (silence at 128).
struct AudioClip {
    std::uint32_t sample_rate = 8000;
    Bytes samples;

    friend bool operator==(const AudioClip&, const AudioClip&) = default;
};

/// Reads a RIFF/WAVE file. Chunks other than fmt and data are skipped.
/// Throws Error(MalformedRiff) on bad magic or chunk lengths and
/// Error(UnsupportedFormat) for anything but PCM, mono, 8 bits.
AudioClip parse_wav(std::span<const std::uint8_t> bytes);

/// Canonical 44-byte header followed by the samples.
Bytes write_wav(const AudioClip& clip);

inline constexpr std::size_t kContainerHeaderSize = 20;

/// On-disk layout: "DECSAU01", original_length (u64 LE), sample_rate
/// (u32 LE), payload.
struct CipherContainer {
    std::uint64_t original_length = 0;
    std::uint32_t sample_rate = 0;
    Bytes payload;

    friend bool operator==(const CipherContainer&, const CipherContainer&) = default;
};

/// Throws Error(BadMagic) or Error(LengthInconsistency).
CipherContainer read_container(std::span<const std::uint8_t> bytes);
/// Throws Error(LengthInconsistency) when the fields violate the layout
/// invariants (payload not block-aligned, original_length beyond payload).
Bytes write_container(const CipherContainer& container);

/// samples[n] = round(128 + amplitude * sin(2 pi freq n / fs)), clamped to
/// 0..255. Throws Error(DomainError) unless 0 < freq < fs/2 and
/// amplitude is within 0..127.
AudioClip synthesize_sine(double freq_hz, std::uint32_t sample_rate, std::size_t n_samples,
                          int amplitude);

}  // namespace decsau
