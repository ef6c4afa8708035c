#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dnacode/coding_core.hpp"

namespace dnacode {

struct GrayImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    GrayImage() = default;
    GrayImage(std::uint32_t w, std::uint32_t h)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(std::uint32_t x, std::uint32_t y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

// Binary PGM (P5), maxval 255.
GrayImage read_pgm(std::istream& in);
void write_pgm(std::ostream& out, const GrayImage& img);
void write_pgm_file(const std::string& path, const GrayImage& img);

// PNG via libpng; color inputs convert to luminance (BT.601 weights).
GrayImage read_png_file(const std::string& path);

// Dispatch on the file's magic bytes (PGM or PNG).
GrayImage read_image_file(const std::string& path);

// Deterministic photographic-looking test image: multi-octave value noise
// over a smooth illumination gradient with a few soft shapes. Identical
// (seed, size) always produces identical pixels.
GrayImage synth_natural_image(std::uint64_t seed, std::uint32_t width,
                              std::uint32_t height);

}  // namespace dnacode
