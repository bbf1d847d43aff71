#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torusgreen {

struct Viewport {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
};

// Grid of small integer class codes. Row-major; row 0 corresponds to the top
// of the written image (largest y coordinate of the viewport).
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> codes;
  Viewport viewport;

  std::uint8_t at(int x, int y) const { return codes[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return codes[static_cast<std::size_t>(y) * width + x]; }
};

enum class ImageFormat { ppm, pgm };

// Binary PPM (P6) / PGM (P5) with a fixed palette: code 0 is black, code 1
// white, code 2 gray, further codes distinct fixed colors. Byte-identical
// output for identical inputs.
std::string serialize_image(const RasterImage& img, ImageFormat fmt);

void write_image(const RasterImage& img, ImageFormat fmt, const std::string& path);

}  // namespace torusgreen
