#pragma once

#include <filesystem>
#include <string>

#include "vecpr/field.hpp"
#include "vecpr/image.hpp"

namespace vecpr {

// Array files are a flat little-endian f64 payload (complex values as
// re, im pairs), row-major, channels concatenated, plus a JSON sidecar
// {n, channels, dtype, layout, data} next to the payload. `base` is the
// path without extension; the pair written is base.json + base.bin.
// Writes are atomic per file (temp + rename).

void write_image(const std::filesystem::path& base, const ComplexImage& img);
void write_image(const std::filesystem::path& base, const RealImage& img);
void write_field(const std::filesystem::path& base, const SixChannelField& x);

ComplexImage read_complex_image(const std::filesystem::path& base);
RealImage read_real_image(const std::filesystem::path& base);
SixChannelField read_field(const std::filesystem::path& base);

}  // namespace vecpr
