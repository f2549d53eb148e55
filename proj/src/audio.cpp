#include "decsau/audio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "decsau/error.hpp"

namespace decsau {
namespace {

constexpr std::string_view kContainerMagic = "DECSAU01";

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
           (static_cast<std::uint32_t>(b[at + 2]) << 16) |
           (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

std::uint64_t read_u64(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint64_t>(read_u32(b, at)) |
           (static_cast<std::uint64_t>(read_u32(b, at + 4)) << 32);
}

void put_le(Bytes& out, std::uint64_t value, int width) {
    for (int i = 0; i < width; ++i) {
        out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
    }
}

void put_tag(Bytes& out, std::string_view tag) {
    out.insert(out.end(), tag.begin(), tag.end());
}

bool has_tag(std::span<const std::uint8_t> b, std::size_t at, std::string_view tag) {
    return std::equal(tag.begin(), tag.end(), b.begin() + static_cast<std::ptrdiff_t>(at),
                      [](char c, std::uint8_t v) { return static_cast<std::uint8_t>(c) == v; });
}

}  // namespace

AudioClip parse_wav(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12 || !has_tag(bytes, 0, "RIFF") || !has_tag(bytes, 8, "WAVE")) {
        throw Error(ErrorCode::MalformedRiff, "not a RIFF/WAVE file");
    }
    const std::uint64_t riff_end = 8ull + read_u32(bytes, 4);
    if (riff_end > bytes.size()) {
        throw Error(ErrorCode::MalformedRiff, "RIFF size field exceeds the file");
    }

    bool have_fmt = false;
    AudioClip clip;
    std::size_t at = 12;
    while (at + 8 <= riff_end) {
        const std::uint32_t size = read_u32(bytes, at + 4);
        const std::size_t body = at + 8;
        if (body + size > riff_end) {
            throw Error(ErrorCode::MalformedRiff, "chunk runs past the end of the file");
        }
        if (has_tag(bytes, at, "fmt ")) {
            if (size < 16) {
                throw Error(ErrorCode::MalformedRiff, "fmt chunk shorter than 16 bytes");
            }
            const std::uint16_t format = read_u16(bytes, body);
            const std::uint16_t channels = read_u16(bytes, body + 2);
            const std::uint32_t rate = read_u32(bytes, body + 4);
            const std::uint16_t bits = read_u16(bytes, body + 14);
            if (format != 1) {
                throw Error(ErrorCode::UnsupportedFormat,
                            "only integer PCM is supported (format tag " + std::to_string(format) + ")");
            }
            if (channels != 1 || bits != 8) {
                throw Error(ErrorCode::UnsupportedFormat,
                            "only mono 8-bit audio is supported (" + std::to_string(channels) +
                                " channels, " + std::to_string(bits) + " bits)");
            }
            if (rate == 0) {
                throw Error(ErrorCode::MalformedRiff, "sample rate is zero");
            }
            clip.sample_rate = rate;
            have_fmt = true;
        } else if (has_tag(bytes, at, "data")) {
            if (!have_fmt) {
                throw Error(ErrorCode::MalformedRiff, "data chunk precedes fmt chunk");
            }
            clip.samples.assign(bytes.begin() + static_cast<std::ptrdiff_t>(body),
                                bytes.begin() + static_cast<std::ptrdiff_t>(body + size));
            return clip;
        }
        at = body + size + (size & 1u);
    }
    throw Error(ErrorCode::MalformedRiff, have_fmt ? "no data chunk" : "no fmt chunk");
}

Bytes write_wav(const AudioClip& clip) {
    const auto n = static_cast<std::uint32_t>(clip.samples.size());
    Bytes out;
    out.reserve(44 + clip.samples.size());
    put_tag(out, "RIFF");
    put_le(out, 36u + n, 4);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_le(out, 16, 4);
    put_le(out, 1, 2);                 // PCM
    put_le(out, 1, 2);                 // mono
    put_le(out, clip.sample_rate, 4);
    put_le(out, clip.sample_rate, 4);  // byte rate: one byte per frame
    put_le(out, 1, 2);                 // block align
    put_le(out, 8, 2);
    put_tag(out, "data");
    put_le(out, n, 4);
    out.insert(out.end(), clip.samples.begin(), clip.samples.end());
    return out;
}

CipherContainer read_container(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kContainerMagic.size() || !has_tag(bytes, 0, kContainerMagic)) {
        throw Error(ErrorCode::BadMagic, "missing DECSAU01 magic");
    }
    if (bytes.size() < kContainerHeaderSize) {
        throw Error(ErrorCode::LengthInconsistency, "container header is truncated");
    }
    CipherContainer c;
    c.original_length = read_u64(bytes, 8);
    c.sample_rate = read_u32(bytes, 16);
    c.payload.assign(bytes.begin() + kContainerHeaderSize, bytes.end());
    if (c.payload.size() % kBlockSize != 0 || c.original_length > c.payload.size()) {
        throw Error(ErrorCode::LengthInconsistency,
                    "payload of " + std::to_string(c.payload.size()) +
                        " bytes is inconsistent with original length " +
                        std::to_string(c.original_length));
    }
    return c;
}

Bytes write_container(const CipherContainer& container) {
    if (container.payload.size() % kBlockSize != 0 ||
        container.original_length > container.payload.size()) {
        throw Error(ErrorCode::LengthInconsistency, "container payload is not block-aligned or too short");
    }
    Bytes out;
    out.reserve(kContainerHeaderSize + container.payload.size());
    put_tag(out, kContainerMagic);
    put_le(out, container.original_length, 8);
    put_le(out, container.sample_rate, 4);
    out.insert(out.end(), container.payload.begin(), container.payload.end());
    return out;
}

AudioClip synthesize_sine(double freq_hz, std::uint32_t sample_rate, std::size_t n_samples,
                          int amplitude) {
    if (sample_rate == 0 || !(freq_hz > 0.0) || !(freq_hz < sample_rate / 2.0)) {
        throw Error(ErrorCode::DomainError, "sine frequency must lie strictly between 0 and fs/2");
    }
    if (amplitude < 0 || amplitude > 127) {
        throw Error(ErrorCode::DomainError, "amplitude must lie in 0..127");
    }
    AudioClip clip;
    clip.sample_rate = sample_rate;
    clip.samples.resize(n_samples);
    const double step = 2.0 * std::numbers::pi * freq_hz / sample_rate;
    for (std::size_t n = 0; n < n_samples; ++n) {
        const double v = std::round(128.0 + amplitude * std::sin(step * static_cast<double>(n)));
        clip.samples[n] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
    return clip;
}

}  // namespace decsau
