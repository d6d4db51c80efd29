#pragma once

#include <span>

#include "plenray/vec.hpp"

namespace plenray {

// Volume of the convex hull of a 3D point set (quickhull). Duplicate and
// interior points are fine. Throws std::invalid_argument when the set has
// fewer than four points or is degenerate (collinear/coplanar).
double convex_hull_volume(std::span<const Vec3> points);

}  // namespace plenray
