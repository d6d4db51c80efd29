#pragma once

#include <string>
#include <variant>
#include <vector>

#include "plenray/lens.hpp"
#include "plenray/vec.hpp"

namespace plenray {

// Outward-facing camera grid on the surface of a box. Counts are cameras
// per axis; spacing along an axis of length L with n cameras is L/(n-1),
// edges included. Cameras shared by two or three faces are deliberately
// duplicated, one per face, with that face's orientation.
struct CuboidRig {
  Vec3 size;           // edge lengths, meters
  int nx = 2, ny = 2, nz = 2;
  Vec3 center;
};

// Cameras at the vertices of an icosphere (icosahedron subdivided
// `subdivisions` times, vertices projected to the sphere), each looking
// radially outward. Vertex count is 10*4^s + 2.
struct SphereRig {
  double diameter = 1.0;
  int subdivisions = 0;
  Vec3 center;
};

struct RigSpec {
  std::variant<CuboidRig, SphereRig> shape;
  LensModel lens;
  int width = 2048;
  int height = 2048;
};

struct RigCamera {
  int sequence = 0;
  CameraPose pose;
  LensModel lens;
  int width = 0, height = 0;
  std::string name;
};

struct RigLayout {
  std::vector<RigCamera> cameras;
};

RigLayout gen_cuboid(const RigSpec& spec);
RigLayout gen_sphere(const RigSpec& spec);
RigLayout generate_rig(const RigSpec& spec);

// Mean over cameras of the distance to the nearest camera at strictly
// positive distance (co-located duplicates excluded). Throws when all
// cameras coincide or fewer than two exist.
double mean_nn_distance(const RigLayout& layout);

// Convex-hull volume of the distinct camera positions - the estimator for
// the immersive interpolation volume of an outward-facing 180-degree rig.
double hull_volume(const RigLayout& layout);

// Camera orientation whose optical axis is `forward`, rolled so the camera
// up direction follows world +Z (world +X near the poles).
Mat3 outward_orientation(const Vec3& forward);

}  // namespace plenray
