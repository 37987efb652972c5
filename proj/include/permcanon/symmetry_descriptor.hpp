#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permcanon/generating_set.hpp"

namespace permcanon {

/// Contracted pairs of one vector space. Positions are 0-based places in
/// the canonical index list; `first` is the contravariant member.
/// metric: +1 symmetric, -1 antisymmetric, 0 no metric (no up/down swap).
struct DummySet {
  int metric = 1;
  std::vector<std::pair<Point, Point>> pairs;
  std::string space;

  friend bool operator==(const DummySet&, const DummySet&) = default;
};

/// Canonical-list positions holding the same component index.
struct RepeatedSet {
  std::vector<Point> positions;
  friend bool operator==(const RepeatedSet&, const RepeatedSet&) = default;
};

/// Implicitly defines the index-symmetry group D = D_E * D_M * D_R.
struct SymmetryDescriptor {
  std::size_t degree = 0;
  std::vector<Point> free_positions;
  std::vector<DummySet> dummy_sets;
  std::vector<RepeatedSet> repeated_sets;

  bool empty() const noexcept {
    return free_positions.empty() && dummy_sets.empty() && repeated_sets.empty();
  }

  /// Throws InvalidArgument on out-of-range or overlapping positions, a bad
  /// metric flag, or a repeated set with fewer than two positions.
  void validate() const {
    std::vector<bool> used(degree, false);
    auto claim = [&](Point p, const char* what) {
      if (p >= degree)
        throw InvalidArgument(std::string(what) + " position " + std::to_string(p + 1) +
                              " outside 1.." + std::to_string(degree));
      if (used[p])
        throw InvalidArgument("position " + std::to_string(p + 1) +
                              " appears in more than one symmetry descriptor entry");
      used[p] = true;
    };
    for (Point p : free_positions) claim(p, "free");
    for (const auto& ds : dummy_sets) {
      if (ds.metric < -1 || ds.metric > 1) throw InvalidArgument("metric flag must be -1, 0 or 1");
      for (auto [up, down] : ds.pairs) {
        claim(up, "dummy");
        claim(down, "dummy");
      }
    }
    for (const auto& rs : repeated_sets) {
      if (rs.positions.size() < 2) throw InvalidArgument("a repeated set needs at least two positions");
      for (Point p : rs.positions) claim(p, "repeated");
    }
  }
};

/// Generators of D: pair exchanges of neighbouring pairs and metric swaps
/// for every dummy set, then adjacent transpositions for every repeated set.
inline GeneratingSet d_generators(const SymmetryDescriptor& desc) {
  desc.validate();
  const std::size_t n = desc.degree;
  GeneratingSet out(n);
  auto make = [&](std::initializer_list<std::pair<Point, Point>> swaps, int sign) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), Point{0});
    for (auto [a, b] : swaps) std::swap(v[a], v[b]);
    return SignedPermutation::unchecked(std::move(v), sign);
  };
  for (const auto& ds : desc.dummy_sets) {
    for (std::size_t i = 0; i + 1 < ds.pairs.size(); ++i) {
      const auto [u1, l1] = ds.pairs[i];
      const auto [u2, l2] = ds.pairs[i + 1];
      out.add(make({{u1, u2}, {l1, l2}}, 1));
    }
    if (ds.metric != 0)
      for (auto [u, l] : ds.pairs) out.add(make({{u, l}}, ds.metric));
  }
  for (const auto& rs : desc.repeated_sets)
    for (std::size_t i = 0; i + 1 < rs.positions.size(); ++i)
      out.add(make({{rs.positions[i], rs.positions[i + 1]}}, 1));
  return out;
}

}  // namespace permcanon
