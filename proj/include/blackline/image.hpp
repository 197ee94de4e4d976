#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blackline/digest.hpp"

namespace blackline {

struct Rgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb8&) const = default;
};

// Row-major 8-bit RGB image.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width*height*3 bytes

  Image() = default;
  Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

  Rgb8 at(int x, int y) const {
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }

  void set(int x, int y, Rgb8 c) {
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
    pixels[i] = c.r;
    pixels[i + 1] = c.g;
    pixels[i + 2] = c.b;
  }

  std::string digest() const { return digest_hex(pixels.data(), pixels.size()); }

  bool operator==(const Image&) const = default;
};

// Writes an 8-bit RGB PNG (stored-deflate zlib stream; no external deps).
void write_png(const std::string& path, const Image& img);

}  // namespace blackline
