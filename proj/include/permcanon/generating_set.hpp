#pragma once

#include <memory>
#include <vector>

#include "permcanon/signed_permutation.hpp"

namespace permcanon {

/// Generators of a group of signed permutations, all of one degree.
/// Exact duplicates are dropped on construction; order is otherwise kept.
class GeneratingSet {
 public:
  explicit GeneratingSet(std::size_t degree = 0) : degree_(degree) {}

  GeneratingSet(std::size_t degree, const std::vector<SignedPermutation>& generators)
      : degree_(degree) {
    for (const auto& g : generators) add(g);
  }

  /// Degree taken from the first generator.
  static GeneratingSet of(const std::vector<SignedPermutation>& generators) {
    if (generators.empty()) throw InvalidArgument("cannot infer degree of an empty generating set");
    return GeneratingSet(generators.front().degree(), generators);
  }

  void add(const SignedPermutation& g) {
    if (g.degree() != degree_)
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) +
                            " in generating set of degree " + std::to_string(degree_));
    if (std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(g);
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  const std::vector<SignedPermutation>& generators() const noexcept { return generators_; }
  auto begin() const noexcept { return generators_.begin(); }
  auto end() const noexcept { return generators_.end(); }
  const SignedPermutation& operator[](std::size_t i) const { return generators_[i]; }

  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;

 private:
  std::size_t degree_;
  std::vector<SignedPermutation> generators_;
};

/// Generators together with their inverses, shared by the Schreier vectors
/// of a stabilizer chain.
struct GeneratorTable {
  std::vector<SignedPermutation> forward;
  std::vector<SignedPermutation> backward;

  std::size_t add(const SignedPermutation& g) {
    forward.push_back(g);
    backward.push_back(inverse(g));
    return forward.size() - 1;
  }
};

/// Generator-level stabilizer: the generators that fix every listed point.
/// This is not the full stabilizer subgroup unless `gs` is strong with
/// respect to a base beginning with `points`.
inline GeneratingSet stabilizer(std::span<const Point> points, const GeneratingSet& gs) {
  GeneratingSet out(gs.degree());
  for (const auto& g : gs) {
    bool fixes = true;
    for (Point p : points) {
      if (p >= gs.degree()) throw InvalidArgument("stabilizer point outside degree");
      if (g[p] != p) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.add(g);
  }
  return out;
}

inline GeneratingSet stabilizer(std::initializer_list<Point> points, const GeneratingSet& gs) {
  return stabilizer(std::span<const Point>(points.begin(), points.size()), gs);
}

}  // namespace permcanon
