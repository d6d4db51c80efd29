#pragma once

#include <optional>
#include <variant>

#include "plenray/vec.hpp"

namespace plenray {

// Ideal lens models. All angles are radians, all sensor quantities are
// millimeters. Pixel coordinates are continuous: (0,0) is the top-left
// corner of the top-left pixel, pixel centers sit at half-integers.

// r = f * theta. `fov` is the full field of view across the image circle,
// which is inscribed in min(width, height).
struct EquidistantFisheye {
  double fov;
};

// Longitude/latitude mapped linearly to u/v. A full panorama is 2pi x pi.
struct Equirectangular {
  double h_fov;
  double v_fov;
};

// Pinhole perspective, r = f * tan(theta).
struct Rectilinear {
  double focal;
  double sensor_w;
  double sensor_h;
};

using LensModel = std::variant<EquidistantFisheye, Equirectangular, Rectilinear>;

// Throws std::invalid_argument when a parameter is out of range
// (fov in (0, 2pi], v_fov in (0, pi], focal/sensor positive).
void validate_lens(const LensModel& lens);

bool lens_equal(const LensModel& a, const LensModel& b);

struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
};

// Unit ray in camera space for a pixel position, or nothing when the pixel
// lies outside the lens's valid image region (e.g. outside the fish-eye
// circle, or outside the image bounds).
std::optional<Vec3> pixel_to_ray(const LensModel& lens, int width, int height, PixelCoord p);

// Inverse of pixel_to_ray on its valid domain; nothing when the direction
// falls outside the lens field of view. `dir` must be unit length.
std::optional<PixelCoord> ray_to_pixel(const LensModel& lens, int width, int height,
                                       const Vec3& dir);

// Grazing-angle cutoff for Z-depth conversions: Z-depth is undefined as the
// ray approaches the projection plane.
inline constexpr double kMinForwardZ = 1e-6;

// Euclidean distance along `dir` to the surface point whose camera-space Z
// is `z`. Throws std::domain_error when dir.z <= kMinForwardZ or z < 0.
double depth_z_to_raylen(double z, const Vec3& dir);

// Camera-space Z of the point at distance `t` along `dir` (may be <= 0 for
// sideways/backward rays; callers filter).
double raylen_to_depth_z(double t, const Vec3& dir);

}  // namespace plenray
