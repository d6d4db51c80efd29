#include "plenray/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plenray {

PlenImage::PlenImage(int w, int h, bool with_depth) : width(w), height(h) {
  if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be >= 1");
  const std::size_t n = static_cast<std::size_t>(w) * h;
  rgb.assign(n * 3, 0.0f);
  if (with_depth) depth.assign(n, 0.0f);
  valid.assign(n, 1);
}

void validate_image(const PlenImage& img) {
  if (img.width < 1 || img.height < 1)
    throw std::invalid_argument("image dimensions must be >= 1");
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  if (img.rgb.size() != n * 3) throw std::invalid_argument("rgb plane size mismatch");
  if (!img.depth.empty() && img.depth.size() != n)
    throw std::invalid_argument("depth plane size mismatch");
  if (img.valid.size() != n) throw std::invalid_argument("validity plane size mismatch");
}

PlenImage tonemap(const PlenImage& img, const ToneMapParams& params) {
  validate_image(img);
  if (params.reinhard_white && !(*params.reinhard_white > 0.0))
    throw std::invalid_argument("reinhard white point must be positive");

  PlenImage out = img;
  const double gain = std::exp2(params.exposure_stops);
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;

  for (std::size_t i = 0; i < n; ++i) {
    double r = img.rgb[i * 3 + 0] * gain;
    double g = img.rgb[i * 3 + 1] * gain;
    double b = img.rgb[i * 3 + 2] * gain;
    if (params.reinhard_white) {
      const double white = *params.reinhard_white;
      const double lum = 0.2126 * r + 0.7152 * g + 0.0722 * b;
      if (lum > 0.0) {
        const double display = lum * (1.0 + lum / (white * white)) / (1.0 + lum);
        const double s = display / lum;
        r *= s;
        g *= s;
        b *= s;
      } else {
        r = g = b = 0.0;
      }
    }
    out.rgb[i * 3 + 0] = static_cast<float>(std::clamp(r, 0.0, 1.0));
    out.rgb[i * 3 + 1] = static_cast<float>(std::clamp(g, 0.0, 1.0));
    out.rgb[i * 3 + 2] = static_cast<float>(std::clamp(b, 0.0, 1.0));
  }
  return out;
}

double srgb_encode(double linear) {
  if (linear <= 0.0031308) return 12.92 * linear;
  return 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
}

}  // namespace plenray
