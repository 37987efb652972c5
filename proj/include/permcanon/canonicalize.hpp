#pragma once

// Butler-Portugal canonicalization: the lexicographically smallest element
// of the double coset S*g*D, or zero when that coset holds both signs of
// some permutation.

#include <array>
#include <optional>
#include <set>

#include "permcanon/schreier_sims.hpp"
#include "permcanon/symmetry_descriptor.hpp"

namespace permcanon {

inline constexpr std::size_t kDefaultMemoryLimit = std::size_t{1} << 30;

struct CanonOptions {
  /// Ceiling on the candidate table; exceeding it throws ResourceLimitError.
  std::size_t memory_limit_bytes = kDefaultMemoryLimit;
  /// Drop duplicate candidates after each slot. Off by default, which keeps
  /// the table size exactly as the plain algorithm produces it.
  bool dedup = false;
};

struct CanonStats {
  std::size_t peak_candidates = 0;
};

/// Either the canonical permutation or the tensor vanishes.
class CanonicalResult {
 public:
  static CanonicalResult zero() { return CanonicalResult(); }
  CanonicalResult(SignedPermutation p) : perm_(std::move(p)) {}

  bool is_zero() const noexcept { return !perm_.has_value(); }
  const SignedPermutation& permutation() const {
    if (!perm_) throw InvalidArgument("canonical result is zero");
    return *perm_;
  }

  friend bool operator==(const CanonicalResult&, const CanonicalResult&) = default;

 private:
  CanonicalResult() = default;
  std::optional<SignedPermutation> perm_;
};

namespace detail {

/// The index-symmetry group D while its stabilizer shrinks one fixed index
/// at a time. D acts on each class independently, so an orbit is the set of
/// active members of a class.
class IndexSymmetry {
 public:
  /// Element of the current D sending one index to another: up to three
  /// transpositions applied in turn, then a sign.
  struct Move {
    std::array<std::pair<Point, Point>, 3> swaps{};
    int count = 0;
    int sign = 1;

    Point apply(Point x) const noexcept {
      for (int i = 0; i < count; ++i) {
        if (x == swaps[i].first) x = swaps[i].second;
        else if (x == swaps[i].second) x = swaps[i].first;
      }
      return x;
    }
  };

  explicit IndexSymmetry(const SymmetryDescriptor& desc)
      : desc_(desc), member_(desc.degree), class_of_(desc.degree, -1) {
    for (std::uint32_t k = 0; k < desc.dummy_sets.size(); ++k) {
      const auto& ds = desc.dummy_sets[k];
      const int up_class = static_cast<int>(classes_.size());
      classes_.emplace_back();
      const int down_class = ds.metric != 0 ? up_class : static_cast<int>(classes_.size());
      if (ds.metric == 0) classes_.emplace_back();
      for (std::uint32_t i = 0; i < ds.pairs.size(); ++i) {
        const auto [u, l] = ds.pairs[i];
        member_[u] = {Kind::dummy, k, i, true};
        member_[l] = {Kind::dummy, k, i, false};
        class_of_[u] = up_class;
        class_of_[l] = down_class;
        classes_[up_class].insert(u);
        classes_[down_class].insert(l);
      }
    }
    for (std::uint32_t k = 0; k < desc.repeated_sets.size(); ++k) {
      const int c = static_cast<int>(classes_.size());
      classes_.emplace_back();
      for (Point p : desc.repeated_sets[k].positions) {
        member_[p] = {Kind::repeated, k, 0, true};
        class_of_[p] = c;
        classes_[c].insert(p);
      }
    }
  }

  /// Smallest index in the orbit of i under the current stabilizer.
  Point orbit_min(Point i) const noexcept {
    const int c = class_of_[i];
    return c < 0 ? i : *classes_[c].begin();
  }

  /// Element of the current stabilizer with q -> p; requires orbit_min(q) == p.
  Move mapping(Point q, Point p) const {
    Move mv;
    if (q == p) return mv;
    const auto& mq = member_[q];
    const auto& mp = member_[p];
    if (mq.kind == Kind::repeated) {
      mv.swaps[mv.count++] = {q, p};
      return mv;
    }
    const auto& ds = desc_.dummy_sets[mq.set];
    if (mq.pair != mp.pair) {
      const auto [uq, lq] = ds.pairs[mq.pair];
      const auto [up, lp] = ds.pairs[mp.pair];
      mv.swaps[mv.count++] = {uq, up};
      mv.swaps[mv.count++] = {lq, lp};
    }
    if (mq.up != mp.up) {
      const auto [up, lp] = ds.pairs[mp.pair];
      mv.swaps[mv.count++] = {up, lp};
      mv.sign = ds.metric;
    }
    return mv;
  }

  /// Restrict to the stabilizer of index p (and, for a dummy, its partner).
  void fix(Point p) {
    const int c = class_of_[p];
    if (c < 0) return;
    const auto& m = member_[p];
    if (m.kind == Kind::dummy) {
      const auto [u, l] = desc_.dummy_sets[m.set].pairs[m.pair];
      deactivate(u);
      deactivate(l);
    } else {
      deactivate(p);
    }
  }

 private:
  enum class Kind : std::uint8_t { none, dummy, repeated };
  struct Member {
    Kind kind = Kind::none;
    std::uint32_t set = 0;
    std::uint32_t pair = 0;
    bool up = true;
  };

  void deactivate(Point p) {
    const int c = class_of_[p];
    if (c < 0) return;
    classes_[c].erase(p);
    class_of_[p] = -1;
  }

  const SymmetryDescriptor& desc_;
  std::vector<Member> member_;
  std::vector<int> class_of_;
  std::vector<std::set<Point>> classes_;
};

/// Coset representatives of one chain level, indexed by orbit point.
class LevelTransversal {
 public:
  LevelTransversal(const SchreierVector& sv, std::size_t degree) : pos_(degree, -1) {
    for (Point q : sv.orbit()) {
      pos_[q] = static_cast<std::int32_t>(reps_.size());
      reps_.push_back(sv.trace(q));
    }
  }
  const SignedPermutation& operator[](Point q) const { return reps_[pos_[q]]; }

 private:
  std::vector<std::int32_t> pos_;
  std::vector<SignedPermutation> reps_;
};

struct Candidate {
  std::vector<Point> images;
  int sign = 1;
};

inline void check_inputs(const SignedPermutation& g, const StrongGeneratingSet& s,
                         const SymmetryDescriptor& desc) {
  if (s.degree() != g.degree())
    throw InvalidArgument("permutation degree " + std::to_string(g.degree()) +
                          " does not match slot group degree " + std::to_string(s.degree()));
  if (desc.degree != g.degree())
    throw InvalidArgument("permutation degree " + std::to_string(g.degree()) +
                          " does not match index descriptor degree " + std::to_string(desc.degree));
  desc.validate();
}

}  // namespace detail

/// Smallest element of S*g*D in lexicographic order of images (sign +
/// before -), or zero. Slots are swept in ascending order; at each slot every
/// candidate is extended by all slot moves that realise the smallest index
/// reachable there.
inline CanonicalResult double_coset_rep(const SignedPermutation& g, const StrongGeneratingSet& s,
                                        const SymmetryDescriptor& desc, const CanonOptions& opt = {},
                                        CanonStats* stats = nullptr) {
  detail::check_inputs(g, s, desc);
  if (s.sign_degenerate()) return CanonicalResult::zero();
  const std::size_t n = g.degree();
  const StrongGeneratingSet chain = with_minimal_base(s);

  std::vector<int> level_at(n, -1);
  for (std::size_t l = 0; l < chain.levels().size(); ++l)
    level_at[chain.levels()[l].base_point] = static_cast<int>(l);
  std::vector<std::optional<detail::LevelTransversal>> transversals(chain.levels().size());

  detail::IndexSymmetry d(desc);
  const std::size_t entry_bytes = n * sizeof(Point) + sizeof(detail::Candidate);
  std::vector<detail::Candidate> table;
  table.push_back({std::vector<Point>(g.images().begin(), g.images().end()), g.sign()});
  std::vector<detail::Candidate> next;
  std::size_t peak = 1;

  for (Point b = 0; b < n; ++b) {
    const int lvl = level_at[b];
    std::vector<Point> single{b};
    const std::vector<Point>& delta = lvl >= 0 ? chain.levels()[lvl].orbit.orbit() : single;
    const detail::LevelTransversal* tv = nullptr;
    if (lvl >= 0 && delta.size() > 1) {
      auto& slot = transversals[lvl];
      if (!slot) slot.emplace(chain.levels()[lvl].orbit, n);
      tv = &*slot;
    }

    Point best = static_cast<Point>(n);
    for (const auto& e : table)
      for (Point j : delta) best = std::min(best, d.orbit_min(e.images[j]));

    for (const auto& e : table) {
      for (Point j : delta) {
        const Point q = e.images[j];
        if (d.orbit_min(q) != best) continue;
        const auto mv = d.mapping(q, best);
        detail::Candidate c;
        c.images.resize(n);
        int sign = e.sign * mv.sign;
        if (tv && j != b) {
          const auto& t = (*tv)[j];
          for (std::size_t x = 0; x < n; ++x) c.images[x] = mv.apply(e.images[t[static_cast<Point>(x)]]);
          sign *= t.sign();
        } else {
          for (std::size_t x = 0; x < n; ++x) c.images[x] = mv.apply(e.images[x]);
        }
        c.sign = sign;
        next.push_back(std::move(c));
        if (next.size() * entry_bytes > opt.memory_limit_bytes)
          throw ResourceLimitError("candidate table exceeded memory limit of " +
                                   std::to_string(opt.memory_limit_bytes) + " bytes at " +
                                   std::to_string(next.size()) + " entries (slot " +
                                   std::to_string(b + 1) + ")");
      }
    }
    peak = std::max(peak, next.size());

    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) {
      if (x.images != y.images) return x.images < y.images;
      return x.sign > y.sign;
    });
    for (std::size_t k = 1; k < next.size(); ++k)
      if (next[k].images == next[k - 1].images && next[k].sign != next[k - 1].sign) {
        if (stats) stats->peak_candidates = peak;
        return CanonicalResult::zero();
      }
    if (opt.dedup)
      next.erase(std::unique(next.begin(), next.end(),
                             [](const auto& x, const auto& y) { return x.images == y.images; }),
                 next.end());
    table.swap(next);
    next.clear();
    d.fix(best);
  }

  if (stats) stats->peak_candidates = peak;
  return CanonicalResult(SignedPermutation::unchecked(std::move(table.front().images), table.front().sign));
}

/// Free-index stage: the element x of S*g whose free indices sit in the
/// earliest slots, compared index by index in ascending index order, together
/// with the slot symmetries that leave those slots untouched.
struct FreeStage {
  SignedPermutation perm;
  StrongGeneratingSet stabilizer;
};

inline FreeStage free_stage(const SignedPermutation& g, const StrongGeneratingSet& s,
                            std::vector<Point> frees) {
  const std::size_t n = g.degree();
  if (s.degree() != n) throw InvalidArgument("permutation and slot group degrees differ");
  std::sort(frees.begin(), frees.end());
  for (std::size_t k = 0; k < frees.size(); ++k) {
    if (frees[k] >= n) throw InvalidArgument("free position outside degree");
    if (k > 0 && frees[k] == frees[k - 1]) throw InvalidArgument("free position repeated");
  }
  const SignedPermutation ginv = inverse(g);
  std::vector<Point> slots;
  for (Point f : frees) slots.push_back(ginv[f]);

  auto gens = s.generators();
  if (s.sign_degenerate()) gens.push_back(SignedPermutation::identity(n, -1));
  SchreierSimsOptions so;
  so.known_order = s.order();
  so.keep_partial_base = true;
  const StrongGeneratingSet chain = schreier_sims(slots, GeneratingSet(n, gens), so);

  SignedPermutation u = SignedPermutation::identity(n);
  for (std::size_t k = 0; k < frees.size(); ++k) {
    const auto& sv = chain.levels()[k].orbit;
    Point beta = sv.root();
    for (Point p : sv.orbit())
      if (u[p] < u[beta]) beta = p;
    u = product(sv.trace(beta), u);
  }
  const SignedPermutation uinv = inverse(u);

  std::vector<Point> base;
  std::vector<SignedPermutation> conj;
  for (std::size_t l = frees.size(); l < chain.levels().size(); ++l) base.push_back(u[chain.base()[l]]);
  for (const auto& y : chain.level_generators(frees.size())) conj.push_back(product(product(uinv, y), u));
  if (chain.sign_degenerate()) conj.push_back(SignedPermutation::identity(n, -1));
  return {product(uinv, g), StrongGeneratingSet(n, std::move(base), conj)};
}

/// Representative of the right coset S*g that places the free indices as
/// early as possible.
inline SignedPermutation right_coset_rep(const SignedPermutation& g, const StrongGeneratingSet& s,
                                         const std::vector<Point>& frees) {
  return free_stage(g, s, frees).perm;
}

/// Canonical form: free indices are positioned first, then the dummy and
/// repeated indices are canonicalized under the slot symmetries that keep
/// the free slots fixed.
inline CanonicalResult canonical_perm(const SignedPermutation& g, const StrongGeneratingSet& s,
                                      const SymmetryDescriptor& desc, const CanonOptions& opt = {},
                                      CanonStats* stats = nullptr) {
  detail::check_inputs(g, s, desc);
  if (s.sign_degenerate()) return CanonicalResult::zero();
  if (desc.free_positions.empty()) return double_coset_rep(g, s, desc, opt, stats);
  auto fs = free_stage(g, s, desc.free_positions);
  return double_coset_rep(fs.perm, fs.stabilizer, desc, opt, stats);
}

inline CanonicalResult canonical_perm(const SignedPermutation& g, const GeneratingSet& gs,
                                      const SymmetryDescriptor& desc, const CanonOptions& opt = {},
                                      CanonStats* stats = nullptr) {
  if (gs.degree() != g.degree()) throw InvalidArgument("permutation and generator degrees differ");
  return canonical_perm(g, schreier_sims({}, gs), desc, opt, stats);
}

}  // namespace permcanon
