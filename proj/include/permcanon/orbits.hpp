#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "permcanon/generating_set.hpp"

namespace permcanon {

/// Orbit of a root point with, for every orbit point, the generator (and
/// direction) by which it was first reached. Coset representatives are
/// composed on demand by tracing back to the root.
class SchreierVector {
 public:
  static constexpr std::int32_t kNotInOrbit = -1;
  static constexpr std::int32_t kRoot = -2;

  SchreierVector() = default;

  /// Breadth-first over the generators listed in `ids` (indices into
  /// `table`), using both the generators and their inverses.
  SchreierVector(Point root, std::shared_ptr<const GeneratorTable> table,
                 const std::vector<std::uint32_t>& ids, std::size_t degree)
      : root_(root), table_(std::move(table)), label_(degree, kNotInOrbit) {
    if (root >= degree) throw InvalidArgument("orbit root outside degree");
    label_[root] = kRoot;
    orbit_.push_back(root);
    for (std::size_t k = 0; k < orbit_.size(); ++k) {
      const Point p = orbit_[k];
      for (std::uint32_t id : ids) {
        for (int dir = 0; dir < 2; ++dir) {
          const auto& x = dir == 0 ? table_->forward[id] : table_->backward[id];
          const Point q = x[p];
          if (label_[q] == kNotInOrbit) {
            label_[q] = static_cast<std::int32_t>(id * 2 + dir);
            orbit_.push_back(q);
          }
        }
      }
    }
  }

  Point root() const noexcept { return root_; }
  std::size_t degree() const noexcept { return label_.size(); }
  /// Orbit points in the order they were reached (root first).
  const std::vector<Point>& orbit() const noexcept { return orbit_; }
  std::size_t size() const noexcept { return orbit_.size(); }
  bool contains(Point q) const noexcept { return q < label_.size() && label_[q] != kNotInOrbit; }
  std::int32_t label(Point q) const noexcept { return label_[q]; }

  /// Element u with root^u == q.
  SignedPermutation trace(Point q) const {
    if (!contains(q))
      throw NotInOrbitError("point " + std::to_string(q + 1) + " is not in the orbit of " +
                            std::to_string(root_ + 1));
    SignedPermutation u = SignedPermutation::identity(label_.size());
    while (q != root_) {
      const auto lab = label_[q];
      const auto id = static_cast<std::size_t>(lab / 2);
      const bool backward = lab % 2 != 0;
      const auto& step = backward ? table_->backward[id] : table_->forward[id];
      const auto& step_inv = backward ? table_->forward[id] : table_->backward[id];
      u = product(step, u);
      q = step_inv[q];
    }
    return u;
  }

  /// h <- h * trace(h[root])^-1, so that afterwards h fixes the root.
  /// Requires h[root] to lie in the orbit.
  void strip(SignedPermutation& h) const {
    Point q = h[root_];
    if (!contains(q)) throw NotInOrbitError("cannot strip: image of root not in orbit");
    while (q != root_) {
      const auto lab = label_[q];
      const auto id = static_cast<std::size_t>(lab / 2);
      const bool backward = lab % 2 != 0;
      const auto& step_inv = backward ? table_->forward[id] : table_->backward[id];
      h = product(h, step_inv);
      q = h[root_];
    }
  }

 private:
  Point root_ = 0;
  std::shared_ptr<const GeneratorTable> table_;
  std::vector<std::int32_t> label_;
  std::vector<Point> orbit_;
};

inline SchreierVector schreier_vector(Point root, const GeneratingSet& gs) {
  auto table = std::make_shared<GeneratorTable>();
  std::vector<std::uint32_t> ids;
  for (const auto& g : gs) ids.push_back(static_cast<std::uint32_t>(table->add(g)));
  return SchreierVector(root, std::move(table), ids, gs.degree());
}

/// Sorted orbit of `point` under the group generated by `gs`.
inline std::vector<Point> orbit(Point point, const GeneratingSet& gs) {
  if (point >= gs.degree()) throw InvalidArgument("orbit point outside degree");
  std::vector<bool> seen(gs.degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gs) {
      const Point q = g[out[k]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline SignedPermutation trace(Point q, const SchreierVector& sv) { return sv.trace(q); }

}  // namespace permcanon
