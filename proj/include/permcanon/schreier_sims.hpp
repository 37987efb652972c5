#pragma once

// Stabilizer chains: strong generating sets, deterministic Schreier-Sims,
// group order and membership by sifting.

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permcanon/orbits.hpp"

namespace permcanon {

/// Arbitrary precision; slot groups of antisymmetric chains reach 3e79 at 100 points.
using GroupOrder = boost::multiprecision::cpp_int;

struct ChainLevel {
  Point base_point = 0;
  std::vector<std::uint32_t> generator_ids;  ///< strong generators fixing earlier base points
  SchreierVector orbit;                      ///< fundamental orbit of base_point
};

struct SiftResult {
  SignedPermutation residue;
  std::size_t level;  ///< first level whose orbit missed, or level count when fully sifted
};

struct SchreierSimsOptions {
  /// When the order is known in advance the construction stops as soon as
  /// the chain accounts for it.
  std::optional<GroupOrder> known_order;
  /// Keep levels for the supplied partial base even where their orbit is
  /// trivial, so that level i always belongs to partial_base[i].
  bool keep_partial_base = false;
};

struct SchreierSimsStats {
  std::size_t schreier_generators_checked = 0;
};

class StrongGeneratingSet;
StrongGeneratingSet schreier_sims(std::span<const Point>, const GeneratingSet&,
                                  const SchreierSimsOptions&, SchreierSimsStats*);

/// Base plus signed generators satisfying the stabilizer-chain property.
/// A group containing -id is flagged sign-degenerate; -id itself is not
/// stored as a generator.
class StrongGeneratingSet {
 public:
  StrongGeneratingSet() : table_(std::make_shared<GeneratorTable>()) {}

  /// Trusts that `generators` are strong with respect to `base`; only the
  /// cheap structural condition is checked (every generator other than
  /// +-id moves some base point).
  StrongGeneratingSet(std::size_t degree, std::vector<Point> base,
                      const std::vector<SignedPermutation>& generators)
      : degree_(degree), base_(std::move(base)), table_(std::make_shared<GeneratorTable>()) {
    check_base();
    for (const auto& g : generators) {
      if (g.degree() != degree_) throw InvalidArgument("generator degree differs from SGS degree");
      if (g.fixes_all_points()) {
        if (g.sign() < 0) sign_degenerate_ = true;
        continue;
      }
      bool moves_base = false;
      for (Point b : base_) moves_base = moves_base || g[b] != b;
      if (!moves_base)
        throw InvalidArgument("generator " + std::to_string(table_->forward.size() + 1) +
                              " fixes every base point");
      if (std::find(table_->forward.begin(), table_->forward.end(), g) == table_->forward.end())
        table_->add(g);
    }
    rebuild_levels(0);
  }

  /// The identity-only group of the given degree.
  static StrongGeneratingSet trivial(std::size_t degree) {
    StrongGeneratingSet s;
    s.degree_ = degree;
    return s;
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Point>& base() const noexcept { return base_; }
  const std::vector<SignedPermutation>& generators() const noexcept { return table_->forward; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }
  bool sign_degenerate() const noexcept { return sign_degenerate_; }

  GeneratingSet generating_set() const { return GeneratingSet(degree_, table_->forward); }

  /// Generators of the i-th stabilizer (fixing base[0..i-1]).
  std::vector<SignedPermutation> level_generators(std::size_t i) const {
    std::vector<SignedPermutation> out;
    if (i >= levels_.size()) return out;
    for (auto id : levels_[i].generator_ids) out.push_back(table_->forward[id]);
    return out;
  }

  SiftResult sift(SignedPermutation h, std::size_t from_level = 0) const {
    for (std::size_t l = from_level; l < levels_.size(); ++l) {
      const auto& sv = levels_[l].orbit;
      if (!sv.contains(h[sv.root()])) return {std::move(h), l};
      sv.strip(h);
    }
    return {std::move(h), levels_.size()};
  }

  /// Product of fundamental orbit lengths (doubled when -id is present).
  GroupOrder order() const {
    GroupOrder o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    if (sign_degenerate_) o *= 2;
    return o;
  }

  bool contains(const SignedPermutation& p) const {
    if (p.degree() != degree_)
      throw InvalidArgument("membership test: degree " + std::to_string(p.degree()) +
                            " vs group degree " + std::to_string(degree_));
    auto [residue, level] = sift(p);
    if (level != levels_.size() || !residue.fixes_all_points()) return false;
    return residue.sign() > 0 || sign_degenerate_;
  }

  /// Base strictly ascending and each base point is the smallest point moved
  /// by its level's generators. Then, sweeping points in ascending order,
  /// every point is either the next base point or fixed by the current
  /// stabilizer.
  bool has_minimal_base() const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      Point smallest = static_cast<Point>(degree_);
      for (auto id : levels_[i].generator_ids)
        smallest = std::min(smallest, table_->forward[id].smallest_moved_point());
      if (smallest != base_[i]) return false;
      if (i > 0 && base_[i] <= base_[i - 1]) return false;
    }
    return true;
  }

 private:
  friend StrongGeneratingSet schreier_sims(std::span<const Point>, const GeneratingSet&,
                                           const SchreierSimsOptions&, SchreierSimsStats*);

  void check_base() const {
    std::vector<bool> seen(degree_, false);
    for (Point b : base_) {
      if (b >= degree_) throw InvalidArgument("base point " + std::to_string(b + 1) + " outside degree");
      if (seen[b]) throw InvalidArgument("base point " + std::to_string(b + 1) + " repeated");
      seen[b] = true;
    }
  }

  void rebuild_level(std::size_t l) {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t id = 0; id < table_->forward.size(); ++id) {
      const auto& g = table_->forward[id];
      bool fixes = true;
      for (std::size_t j = 0; j < l && fixes; ++j) fixes = g[base_[j]] == base_[j];
      if (fixes) ids.push_back(id);
    }
    levels_[l].base_point = base_[l];
    levels_[l].orbit = SchreierVector(base_[l], table_, ids, degree_);
    levels_[l].generator_ids = std::move(ids);
  }

  void rebuild_levels(std::size_t from) {
    levels_.resize(base_.size());
    for (std::size_t l = from; l < base_.size(); ++l) rebuild_level(l);
  }

  std::size_t degree_ = 0;
  std::vector<Point> base_;
  std::shared_ptr<GeneratorTable> table_;
  std::vector<ChainLevel> levels_;
  bool sign_degenerate_ = false;
};

/// Deterministic Schreier-Sims. The returned base starts with the points of
/// `partial_base` (those with trivial orbits dropped unless
/// keep_partial_base) and is extended, when a sifted Schreier generator fixes
/// every base point, by that residue's smallest moved point.
inline StrongGeneratingSet schreier_sims(std::span<const Point> partial_base, const GeneratingSet& gs,
                                         const SchreierSimsOptions& options = {},
                                         SchreierSimsStats* stats = nullptr) {
  StrongGeneratingSet s;
  s.degree_ = gs.degree();
  s.base_.assign(partial_base.begin(), partial_base.end());
  s.check_base();
  const std::size_t kept_prefix = options.keep_partial_base ? s.base_.size() : 0;

  for (const auto& g : gs) {
    if (g.fixes_all_points()) {
      if (g.sign() < 0) s.sign_degenerate_ = true;
      continue;
    }
    if (std::find(s.table_->forward.begin(), s.table_->forward.end(), g) != s.table_->forward.end())
      continue;
    s.table_->add(g);
    bool moves_base = false;
    for (Point b : s.base_) moves_base = moves_base || g[b] != b;
    if (!moves_base) s.base_.push_back(g.smallest_moved_point());
  }
  s.rebuild_levels(0);

  auto done = [&] { return options.known_order && s.order() >= *options.known_order; };
  std::size_t checked = 0;

  if (!done()) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(s.levels_.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      const auto lvl = static_cast<std::size_t>(i);
      const std::vector<Point> orbit_pts = s.levels_[lvl].orbit.orbit();
      const std::vector<std::uint32_t> ids = s.levels_[lvl].generator_ids;
      for (std::size_t k = 0; k < orbit_pts.size() && !restarted; ++k) {
        const SignedPermutation u = s.levels_[lvl].orbit.trace(orbit_pts[k]);
        for (auto id : ids) {
          ++checked;
          auto [h, j] = s.sift(product(u, s.table_->forward[id]), lvl);
          if (j == s.levels_.size() && h.fixes_all_points()) {
            if (h.sign() < 0 && !s.sign_degenerate_) {
              s.sign_degenerate_ = true;
              if (done()) break;
            }
            continue;
          }
          if (j == s.levels_.size()) s.base_.push_back(h.smallest_moved_point());
          const auto new_id = static_cast<std::uint32_t>(s.table_->add(h));
          // h lies in the group generated at levels 0..lvl, so their orbits
          // are unchanged; it still belongs to their generator lists.
          for (std::size_t l = 0; l <= lvl; ++l) s.levels_[l].generator_ids.push_back(new_id);
          s.rebuild_levels(lvl + 1);
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
        if (done()) break;
      }
      if (done()) break;
      if (!restarted) --i;
    }
  }

  // Drop levels whose fundamental orbit is trivial.
  std::vector<Point> base;
  for (std::size_t l = 0; l < s.levels_.size(); ++l)
    if (l < kept_prefix || s.levels_[l].orbit.size() > 1) base.push_back(s.base_[l]);
  if (base.size() != s.base_.size()) {
    s.base_ = std::move(base);
    s.rebuild_levels(0);
  }
  if (stats) stats->schreier_generators_checked = checked;
  return s;
}

inline StrongGeneratingSet schreier_sims(std::initializer_list<Point> partial_base,
                                         const GeneratingSet& gs,
                                         const SchreierSimsOptions& options = {}) {
  return schreier_sims(std::span<const Point>(partial_base.begin(), partial_base.size()), gs, options);
}

inline GroupOrder order_of_group(const StrongGeneratingSet& sgs) { return sgs.order(); }

inline bool perm_member(const SignedPermutation& p, const StrongGeneratingSet& sgs) {
  return sgs.contains(p);
}

/// Same group, chain rebuilt on a lexicographically minimal base.
inline StrongGeneratingSet with_minimal_base(const StrongGeneratingSet& sgs) {
  if (sgs.has_minimal_base()) return sgs;
  std::vector<Point> all(sgs.degree());
  std::iota(all.begin(), all.end(), Point{0});
  SchreierSimsOptions opt;
  opt.known_order = sgs.order();
  auto gens = sgs.generators();
  if (sgs.sign_degenerate()) gens.push_back(SignedPermutation::identity(sgs.degree(), -1));
  return schreier_sims(all, GeneratingSet(sgs.degree(), gens), opt);
}

}  // namespace permcanon
