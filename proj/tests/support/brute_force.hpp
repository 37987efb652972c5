#pragma once

// Exhaustive reference answers for small groups. Everything here enumerates
// whole groups with Dimino and never touches stabilizer chains.

#include <map>
#include <optional>
#include <random>

#include "permcanon/dimino.hpp"
#include "permcanon/symmetry_descriptor.hpp"

namespace oracle {

using permcanon::GeneratingSet;
using permcanon::Point;
using permcanon::SignedPermutation;
using permcanon::SymmetryDescriptor;

/// nullopt means zero.
using Answer = std::optional<SignedPermutation>;

/// Every group element with both signs collapsed into one entry per image
/// vector; `both` records images that occur with both signs.
struct SignedSet {
  std::map<std::vector<Point>, int> signs;  // bit 1: +, bit 2: -
  bool has_both() const {
    for (const auto& [img, bits] : signs)
      if (bits == 3) return true;
    return false;
  }
};

inline std::vector<Point> imgs(const SignedPermutation& p) { return {p.images().begin(), p.images().end()}; }

inline Answer lexmin(const std::vector<SignedPermutation>& coset) {
  SignedSet set;
  for (const auto& x : coset) set.signs[imgs(x)] |= x.sign() > 0 ? 1 : 2;
  if (set.has_both()) return std::nullopt;
  const auto& [img, bits] = *set.signs.begin();
  return SignedPermutation(img, bits == 1 ? 1 : -1);
}

/// Lexicographic minimum of S*g*D, or zero when S*g*D holds some image with
/// both signs.
inline Answer double_coset(const SignedPermutation& g, const GeneratingSet& s, const SymmetryDescriptor& desc) {
  const auto S = permcanon::dimino(s);
  const auto D = permcanon::dimino(permcanon::d_generators(desc));
  std::vector<SignedPermutation> coset;
  for (const auto& a : S)
    for (const auto& d : D) coset.push_back(a * g * d);
  return lexmin(coset);
}

/// Slots holding the free indices (ascending index order) in s*g.
inline std::vector<Point> free_slots(const SignedPermutation& x, std::vector<Point> frees) {
  std::sort(frees.begin(), frees.end());
  const auto inv = permcanon::inverse(x);
  std::vector<Point> out;
  for (Point f : frees) out.push_back(inv[f]);
  return out;
}

/// Elements of S*g whose free slots are lexicographically earliest.
inline std::vector<SignedPermutation> best_free_placements(const SignedPermutation& g, const GeneratingSet& s,
                                                           const std::vector<Point>& frees) {
  std::map<std::vector<Point>, std::vector<SignedPermutation>> by_key;
  for (const auto& a : permcanon::dimino(s)) {
    auto x = a * g;
    by_key[free_slots(x, frees)].push_back(x);
  }
  return by_key.begin()->second;
}

/// Two-step answer: free placement first, then lexmin over the remaining
/// slot freedom and all of D.
inline Answer canonical(const SignedPermutation& g, const GeneratingSet& s, const SymmetryDescriptor& desc) {
  const auto D = permcanon::dimino(permcanon::d_generators(desc));
  std::vector<SignedPermutation> coset;
  for (const auto& x : best_free_placements(g, s, desc.free_positions))
    for (const auto& d : D) coset.push_back(x * d);
  return lexmin(coset);
}

/// Uniform random permutation of degree n.
inline SignedPermutation random_perm(std::size_t n, std::mt19937_64& rng, bool random_sign = false) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin(), v.end(), rng);
  int sign = random_sign && (rng() & 1) ? -1 : 1;
  return SignedPermutation(std::move(v), sign);
}

/// Random descriptor on n indices: some frees, dummy pairs with a random
/// metric, possibly a repeated set.
inline SymmetryDescriptor random_descriptor(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> idx(n);
  std::iota(idx.begin(), idx.end(), Point{0});
  SymmetryDescriptor d;
  d.degree = n;
  std::size_t k = 0;
  const std::size_t nfree = rng() % 3;
  for (; k < nfree && k < n; ++k) d.free_positions.push_back(idx[k]);
  while (k + 2 <= n && rng() % 4 != 0) {
    permcanon::DummySet ds;
    ds.metric = static_cast<int>(rng() % 3) - 1;
    const std::size_t pairs = 1 + rng() % 3;
    for (std::size_t p = 0; p < pairs && k + 2 <= n; ++p, k += 2) ds.pairs.push_back({idx[k], idx[k + 1]});
    d.dummy_sets.push_back(ds);
  }
  if (k + 2 <= n && rng() % 2) {
    permcanon::RepeatedSet rs;
    const std::size_t m = 2 + rng() % std::min<std::size_t>(2, n - k - 1);
    for (std::size_t i = 0; i < m; ++i) rs.positions.push_back(idx[k++]);
    d.repeated_sets.push_back(rs);
  }
  for (; k < n; ++k) d.free_positions.push_back(idx[k]);
  return d;
}

}  // namespace oracle
