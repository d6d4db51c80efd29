#include "plenray/lens.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plenray {

namespace {

constexpr double kPi = std::numbers::pi;

bool in_image(double u, double v, int w, int h) {
  return u >= 0.0 && u <= double(w) && v >= 0.0 && v <= double(h);
}

}  // namespace

void validate_lens(const LensModel& lens) {
  std::visit(
      [](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, EquidistantFisheye>) {
          if (!(l.fov > 0.0 && l.fov <= 2 * kPi))
            throw std::invalid_argument("fisheye fov must be in (0, 2pi]");
        } else if constexpr (std::is_same_v<T, Equirectangular>) {
          if (!(l.h_fov > 0.0 && l.h_fov <= 2 * kPi))
            throw std::invalid_argument("equirectangular h_fov must be in (0, 2pi]");
          if (!(l.v_fov > 0.0 && l.v_fov <= kPi))
            throw std::invalid_argument("equirectangular v_fov must be in (0, pi]");
        } else {
          if (!(l.focal > 0.0))
            throw std::invalid_argument("rectilinear focal must be positive");
          if (!(l.sensor_w > 0.0 && l.sensor_h > 0.0))
            throw std::invalid_argument("rectilinear sensor size must be positive");
        }
      },
      lens);
}

bool lens_equal(const LensModel& a, const LensModel& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<EquidistantFisheye>(&a))
    return fa->fov == std::get<EquidistantFisheye>(b).fov;
  if (const auto* ea = std::get_if<Equirectangular>(&a)) {
    const auto& eb = std::get<Equirectangular>(b);
    return ea->h_fov == eb.h_fov && ea->v_fov == eb.v_fov;
  }
  const auto& ra = std::get<Rectilinear>(a);
  const auto& rb = std::get<Rectilinear>(b);
  return ra.focal == rb.focal && ra.sensor_w == rb.sensor_w && ra.sensor_h == rb.sensor_h;
}

std::optional<Vec3> pixel_to_ray(const LensModel& lens, int width, int height, PixelCoord p) {
  if (width < 1 || height < 1) return std::nullopt;
  if (!in_image(p.u, p.v, width, height)) return std::nullopt;

  if (const auto* fish = std::get_if<EquidistantFisheye>(&lens)) {
    const double cu = 0.5 * width, cv = 0.5 * height;
    const double radius = 0.5 * std::min(width, height);
    const double du = p.u - cu, dv = p.v - cv;
    const double rho = std::hypot(du, dv);
    if (rho > radius) return std::nullopt;
    const double theta = (rho / radius) * (0.5 * fish->fov);
    const double psi = std::atan2(dv, du);
    const double st = std::sin(theta);
    return Vec3{st * std::cos(psi), st * std::sin(psi), std::cos(theta)};
  }

  if (const auto* eq = std::get_if<Equirectangular>(&lens)) {
    const double lon = (p.u / width - 0.5) * eq->h_fov;
    const double lat = (0.5 - p.v / height) * eq->v_fov;
    const double cl = std::cos(lat);
    return Vec3{cl * std::sin(lon), -std::sin(lat), cl * std::cos(lon)};
  }

  const auto& rect = std::get<Rectilinear>(lens);
  const double sx = (p.u / width - 0.5) * rect.sensor_w;
  const double sy = (p.v / height - 0.5) * rect.sensor_h;
  return Vec3{sx, sy, rect.focal}.normalized();
}

std::optional<PixelCoord> ray_to_pixel(const LensModel& lens, int width, int height,
                                       const Vec3& dir) {
  if (width < 1 || height < 1) return std::nullopt;

  if (const auto* fish = std::get_if<EquidistantFisheye>(&lens)) {
    // atan2 keeps the inverse well conditioned near the optical axis,
    // where acos(dir.z) would lose ~8 digits.
    const double rxy = std::hypot(dir.x, dir.y);
    const double theta = std::atan2(rxy, dir.z);
    const double half_fov = 0.5 * fish->fov;
    if (theta > half_fov) return std::nullopt;
    const double cu = 0.5 * width, cv = 0.5 * height;
    if (rxy == 0.0) return PixelCoord{cu, cv};
    const double radius = 0.5 * std::min(width, height);
    const double rho = (theta / half_fov) * radius;
    return PixelCoord{cu + rho * (dir.x / rxy), cv + rho * (dir.y / rxy)};
  }

  if (const auto* eq = std::get_if<Equirectangular>(&lens)) {
    const double lon = std::atan2(dir.x, dir.z);
    const double lat = std::atan2(-dir.y, std::hypot(dir.x, dir.z));
    if (std::abs(lon) > 0.5 * eq->h_fov || std::abs(lat) > 0.5 * eq->v_fov)
      return std::nullopt;
    return PixelCoord{(lon / eq->h_fov + 0.5) * width, (0.5 - lat / eq->v_fov) * height};
  }

  const auto& rect = std::get<Rectilinear>(lens);
  if (dir.z <= 0.0) return std::nullopt;
  const double sx = rect.focal * dir.x / dir.z;
  const double sy = rect.focal * dir.y / dir.z;
  const double u = (sx / rect.sensor_w + 0.5) * width;
  const double v = (sy / rect.sensor_h + 0.5) * height;
  if (!in_image(u, v, width, height)) return std::nullopt;
  return PixelCoord{u, v};
}

double depth_z_to_raylen(double z, const Vec3& dir) {
  if (!(dir.z > kMinForwardZ))
    throw std::domain_error("Z-depth is undefined for rays grazing or behind the projection plane");
  if (z < 0.0) throw std::domain_error("Z-depth must be non-negative");
  return z / dir.z;
}

double raylen_to_depth_z(double t, const Vec3& dir) { return t * dir.z; }

}  // namespace plenray
