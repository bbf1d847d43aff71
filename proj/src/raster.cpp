#include "torusgreen/raster.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "torusgreen/errors.hpp"

namespace torusgreen {

namespace {

// code 0 black, 1 white, 2 gray, then fixed distinct colors
constexpr unsigned char kPalette[8][3] = {
    {0, 0, 0},       {255, 255, 255}, {160, 160, 160}, {70, 130, 180},
    {205, 92, 92},   {60, 179, 113},  {218, 165, 32},  {147, 112, 219},
};
constexpr unsigned char kGrey[8] = {0, 255, 160, 96, 200, 64, 224, 32};

}  // namespace

std::string serialize_image(const RasterImage& img, ImageFormat fmt) {
  if (img.width < 1 || img.height < 1 ||
      img.codes.size() != static_cast<std::size_t>(img.width) * img.height) {
    throw std::invalid_argument("raster image dimensions do not match the code grid");
  }
  char header[64];
  const int hlen = std::snprintf(header, sizeof(header), "%s\n%d %d\n255\n",
                                 fmt == ImageFormat::ppm ? "P6" : "P5",
                                 img.width, img.height);
  std::string out(header, static_cast<std::size_t>(hlen));
  if (fmt == ImageFormat::ppm) {
    out.reserve(out.size() + img.codes.size() * 3);
    for (std::uint8_t code : img.codes) {
      const unsigned char* rgb = kPalette[code % 8];
      out.push_back(static_cast<char>(rgb[0]));
      out.push_back(static_cast<char>(rgb[1]));
      out.push_back(static_cast<char>(rgb[2]));
    }
  } else {
    out.reserve(out.size() + img.codes.size());
    for (std::uint8_t code : img.codes) {
      out.push_back(static_cast<char>(kGrey[code % 8]));
    }
  }
  return out;
}

void write_image(const RasterImage& img, ImageFormat fmt, const std::string& path) {
  const std::string bytes = serialize_image(img, fmt);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) {
    throw IoError("write failed for '" + path + "'");
  }
}

}  // namespace torusgreen
