#include "plenray/hull.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace plenray {

namespace {

struct Face {
  int a, b, c;
  Vec3 normal;  // unit, outward
  double offset;         // plane: normal . p = offset
  std::vector<int> outside;
  int farthest = -1;
  double farthest_dist = 0.0;
  bool alive = true;

  double dist(const Vec3& p) const { return normal.dot(p) - offset; }
};

class QuickHull {
 public:
  QuickHull(std::span<const Vec3> points, double eps) : pts_(points), eps_(eps) {}

  double volume() {
    build_initial_simplex();
    assign_outside(pending_, faces_indices());
    expand();
    double v = 0.0;
    for (const Face& f : faces_) {
      if (!f.alive) continue;
      const Vec3 a = pts_[f.a] - interior_;
      const Vec3 b = pts_[f.b] - interior_;
      const Vec3 c = pts_[f.c] - interior_;
      v += a.dot(b.cross(c)) / 6.0;
    }
    return v;
  }

 private:
  std::span<const Vec3> pts_;
  double eps_;
  std::vector<Face> faces_;
  std::vector<int> pending_;  // candidate point indices during setup
  Vec3 interior_;

  std::vector<int> faces_indices() const {
    std::vector<int> all(faces_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    return all;
  }

  void make_face(int a, int b, int c) {
    Face f;
    f.a = a;
    f.b = b;
    f.c = c;
    Vec3 n = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]);
    const double len = n.norm();
    if (len == 0.0) throw std::invalid_argument("degenerate hull face");
    n = n / len;
    // Orient outward relative to the interior reference point.
    if (n.dot(interior_) - n.dot(pts_[a]) > 0) {
      std::swap(f.b, f.c);
      n = -n;
    }
    f.normal = n;
    f.offset = n.dot(pts_[a]);
    faces_.push_back(std::move(f));
  }

  void build_initial_simplex() {
    const int n = int(pts_.size());
    // Extreme point along x (ties broken by index for determinism).
    int i0 = 0;
    for (int i = 1; i < n; ++i)
      if (pts_[i].x < pts_[i0].x) i0 = i;
    int i1 = -1;
    double best = eps_;
    for (int i = 0; i < n; ++i) {
      const double d = (pts_[i] - pts_[i0]).norm();
      if (d > best) {
        best = d;
        i1 = i;
      }
    }
    if (i1 < 0) throw std::invalid_argument("hull degenerate: all points coincide");

    const Vec3 axis = (pts_[i1] - pts_[i0]).normalized();
    int i2 = -1;
    best = eps_;
    for (int i = 0; i < n; ++i) {
      const Vec3 rel = pts_[i] - pts_[i0];
      const double d = (rel - axis * rel.dot(axis)).norm();
      if (d > best) {
        best = d;
        i2 = i;
      }
    }
    if (i2 < 0) throw std::invalid_argument("hull degenerate: points are collinear");

    const Vec3 pn = (pts_[i1] - pts_[i0]).cross(pts_[i2] - pts_[i0]).normalized();
    int i3 = -1;
    best = eps_;
    for (int i = 0; i < n; ++i) {
      const double d = std::abs(pn.dot(pts_[i] - pts_[i0]));
      if (d > best) {
        best = d;
        i3 = i;
      }
    }
    if (i3 < 0) throw std::invalid_argument("hull degenerate: points are coplanar");

    interior_ = (pts_[i0] + pts_[i1] + pts_[i2] + pts_[i3]) / 4.0;
    make_face(i0, i1, i2);
    make_face(i0, i1, i3);
    make_face(i0, i2, i3);
    make_face(i1, i2, i3);

    pending_.reserve(n);
    for (int i = 0; i < n; ++i)
      if (i != i0 && i != i1 && i != i2 && i != i3) pending_.push_back(i);
  }

  void assign_outside(const std::vector<int>& candidates, const std::vector<int>& face_ids) {
    for (int p : candidates) {
      for (int fi : face_ids) {
        Face& f = faces_[fi];
        if (!f.alive) continue;
        const double d = f.dist(pts_[p]);
        if (d > eps_) {
          f.outside.push_back(p);
          if (d > f.farthest_dist) {
            f.farthest_dist = d;
            f.farthest = p;
          }
          break;
        }
      }
    }
  }

  void expand() {
    while (true) {
      int fi = -1;
      for (int i = 0; i < int(faces_.size()); ++i)
        if (faces_[i].alive && !faces_[i].outside.empty()) {
          fi = i;
          break;
        }
      if (fi < 0) return;

      const int eye = faces_[fi].farthest;
      const Vec3 eye_pt = pts_[eye];

      // Visible set and its boundary. An undirected edge used by exactly
      // one visible face is on the horizon.
      std::vector<int> visible;
      std::map<std::pair<int, int>, std::pair<int, int>> edges;  // undirected -> directed
      std::vector<int> orphans;
      for (int i = 0; i < int(faces_.size()); ++i) {
        Face& f = faces_[i];
        if (!f.alive || !(f.dist(eye_pt) > eps_)) continue;
        visible.push_back(i);
        const int vs[3][2] = {{f.a, f.b}, {f.b, f.c}, {f.c, f.a}};
        for (const auto& e : vs) {
          const auto key = std::minmax(e[0], e[1]);
          auto it = edges.find(key);
          if (it == edges.end())
            edges.emplace(key, std::make_pair(e[0], e[1]));
          else
            edges.erase(it);
        }
        orphans.insert(orphans.end(), f.outside.begin(), f.outside.end());
        f.alive = false;
        f.outside.clear();
      }

      std::vector<int> fresh;
      for (const auto& [key, directed] : edges) {
        fresh.push_back(int(faces_.size()));
        make_face(directed.first, directed.second, eye);
      }

      std::sort(orphans.begin(), orphans.end());
      orphans.erase(std::unique(orphans.begin(), orphans.end()), orphans.end());
      std::erase(orphans, eye);
      assign_outside(orphans, fresh);
    }
  }
};

}  // namespace

double convex_hull_volume(std::span<const Vec3> points) {
  if (points.size() < 4)
    throw std::invalid_argument("convex hull volume needs at least 4 points");

  Vec3 lo = points[0], hi = points[0];
  for (const Vec3& p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const double eps = 1e-9 * std::max((hi - lo).norm(), 1e-30);

  QuickHull hull(points, eps);
  return hull.volume();
}

}  // namespace plenray
