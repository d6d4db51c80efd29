#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace plenray {

// How a stored depth plane is to be read: Z-depth (meters along the camera
// forward axis, the dataset convention) or Euclidean ray length.
enum class DepthInterpretation : std::uint8_t { Z, RayLength };

// HDR image: linear-radiance RGB with an optional depth plane and a
// validity mask (0 = outside the fish-eye circle / unmapped).
struct PlenImage {
  int width = 0;
  int height = 0;
  std::vector<float> rgb;             // interleaved, width*height*3
  std::vector<float> depth;           // width*height when present, else empty
  std::vector<std::uint8_t> valid;    // width*height
  DepthInterpretation depth_interp = DepthInterpretation::Z;

  PlenImage() = default;
  PlenImage(int w, int h, bool with_depth);

  bool has_depth() const { return !depth.empty(); }
  std::size_t pixel_index(int x, int y) const {
    return static_cast<std::size_t>(y) * width + x;
  }
  float* rgb_at(int x, int y) { return &rgb[pixel_index(x, y) * 3]; }
  const float* rgb_at(int x, int y) const { return &rgb[pixel_index(x, y) * 3]; }
  float& depth_at(int x, int y) { return depth[pixel_index(x, y)]; }
  float depth_at(int x, int y) const { return depth[pixel_index(x, y)]; }
  bool valid_at(int x, int y) const { return valid[pixel_index(x, y)] != 0; }
};

// Throws std::invalid_argument when plane sizes disagree with the
// dimensions.
void validate_image(const PlenImage& img);

struct ToneMapParams {
  double exposure_stops = 0.0;                 // linear gain 2^stops
  std::optional<double> reinhard_white;        // extended-Reinhard white point
};

// Exposure first, then (optionally) the extended Reinhard operator on
// luminance with hue-preserving RGB scaling, then clamp to [0, 1]. The
// result is display-referred; depth and validity pass through unchanged.
PlenImage tonemap(const PlenImage& img, const ToneMapParams& params);

// sRGB transfer function for a linear component in [0, 1].
double srgb_encode(double linear);

}  // namespace plenray
