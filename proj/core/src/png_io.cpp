#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "plenray/image_io.hpp"

namespace plenray {

namespace {

std::uint8_t quantize(double v) {
  // Round half away from zero.
  return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(v, 0.0, 1.0)));
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};

}  // namespace

void write_png(const PlenImage& img, const std::filesystem::path& path) {
  validate_image(img);

  const bool any_invalid =
      std::any_of(img.valid.begin(), img.valid.end(), [](std::uint8_t v) { return v == 0; });
  const int channels = any_invalid ? 4 : 3;

  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(img.width) * img.height * channels);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::size_t i = img.pixel_index(x, y);
      std::uint8_t* out = &bytes[i * channels];
      if (img.valid[i]) {
        const float* rgb = &img.rgb[i * 3];
        for (int c = 0; c < 3; ++c) out[c] = quantize(srgb_encode(rgb[c]));
        if (channels == 4) out[3] = 255;
      } else {
        out[0] = out[1] = out[2] = 0;
        if (channels == 4) out[3] = 0;
      }
    }
  }

  std::unique_ptr<std::FILE, FileCloser> fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw ImageIoError("cannot open for writing: " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw ImageIoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw ImageIoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw ImageIoError("failed to write " + path.string());
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.width, img.height, 8,
               channels == 4 ? PNG_COLOR_TYPE_RGBA : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_sRGB_gAMA_and_cHRM(png, info, PNG_sRGB_INTENT_PERCEPTUAL);
  png_write_info(png, info);
  std::vector<png_bytep> rows(img.height);
  for (int y = 0; y < img.height; ++y)
    rows[y] = bytes.data() + static_cast<std::size_t>(y) * img.width * channels;
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace plenray
