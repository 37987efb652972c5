#pragma once

// Monomial <-> (permutation, slot symmetries, index symmetries).

#include <map>
#include <tuple>

#include "permcanon/canonicalize.hpp"
#include "permcanon/tensor/expression.hpp"
#include "permcanon/tensor/registry.hpp"

namespace permcanon::tensor {

/// Factors in canonical factor order with their heads resolved; slots are
/// numbered consecutively through the factors.
struct TensorProduct {
  std::vector<Factor> factors;
  std::vector<TensorHead> heads;
  std::size_t degree = 0;
};

/// The canonical index list C0 and the index-symmetry data derived from it.
struct CanonicalConfiguration {
  std::vector<IndexAtom> c0;
  SymmetryDescriptor descriptor;
};

/// Resolves heads and sorts the factors by head name (stable).
inline TensorProduct make_product(const Monomial& m, const Registry& reg) {
  if (m.zero) throw InvalidExpression("the zero monomial has no tensor product");
  TensorProduct p;
  p.factors = m.factors;
  std::stable_sort(p.factors.begin(), p.factors.end(),
                   [](const Factor& a, const Factor& b) { return a.head < b.head; });
  for (const auto& f : p.factors) {
    p.heads.push_back(reg.head(f.head, f.indices.size()));
    p.degree += f.indices.size();
  }
  return p;
}

namespace detail {

inline SignedPermutation embed(const SignedPermutation& p, std::size_t offset, std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i)
    v[offset + i] = static_cast<Point>(offset + p[static_cast<Point>(i)]);
  return SignedPermutation::unchecked(std::move(v), p.sign());
}

inline GroupOrder factorial(std::size_t k) {
  GroupOrder f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace detail

/// Slot symmetries of the whole product: every factor's generators moved to
/// its slot block, plus exchanges of adjacent identical factors. The base is
/// the concatenation of the factor bases, extended by Schreier-Sims only if
/// the exchanges leave the set short of the expected order.
inline StrongGeneratingSet build_product_sgs(const TensorProduct& p) {
  const std::size_t n = p.degree;
  std::vector<Point> base;
  std::vector<SignedPermutation> gens;
  GroupOrder expected = 1;
  std::size_t offset = 0;
  std::size_t run = 1;
  for (std::size_t k = 0; k < p.factors.size(); ++k) {
    const auto& s = p.heads[k].symmetry;
    for (Point b : s.base()) base.push_back(static_cast<Point>(offset + b));
    for (const auto& g : s.generators()) gens.push_back(detail::embed(g, offset, n));
    if (s.sign_degenerate()) gens.push_back(SignedPermutation::identity(n, -1));
    expected *= s.order();
    const std::size_t arity = p.factors[k].indices.size();
    if (k > 0 && p.factors[k].head == p.factors[k - 1].head) {
      std::vector<Point> v(n);
      std::iota(v.begin(), v.end(), Point{0});
      for (std::size_t i = 0; i < arity; ++i) std::swap(v[offset - arity + i], v[offset + i]);
      gens.push_back(SignedPermutation::unchecked(std::move(v), 1));
      ++run;
    } else {
      expected *= detail::factorial(run);
      run = 1;
    }
    offset += arity;
  }
  expected *= detail::factorial(run);
  SchreierSimsOptions opt;
  opt.known_order = expected;
  opt.keep_partial_base = true;
  return schreier_sims(base, GeneratingSet(n, gens), opt);
}

namespace detail {

/// Lowercase symbols, then other symbols, then components.
inline int tier(const IndexAtom& a) {
  if (a.is_component()) return 2;
  return std::islower(static_cast<unsigned char>(a.name.front())) ? 0 : 1;
}

}  // namespace detail

/// C0 order: lowercase symbols before other symbols before components;
/// within a tier frees before dummies, then by name (components by value),
/// contravariant before covariant. Abstract indices occurring twice are
/// dummies and must have opposite variance; equal components (same value
/// and variance) form repeated sets; a lone component is treated as free.
inline CanonicalConfiguration build_canonical_configuration(const TensorProduct& p, const Registry& reg) {
  std::map<std::string, std::vector<IndexAtom>> abstract;
  std::map<std::pair<long, bool>, std::size_t> components;
  for (const auto& f : p.factors)
    for (const auto& i : f.indices) {
      if (i.is_component())
        ++components[{i.value, i.up}];
      else
        abstract[i.name].push_back(i);
    }

  struct Entry {
    IndexAtom atom;
    int role;  // 0 free, 1 dummy
  };
  std::vector<Entry> entries;
  for (const auto& [name, occ] : abstract) {
    if (occ.size() == 1) {
      entries.push_back({occ[0], 0});
      continue;
    }
    if (occ.size() > 2) throw InvalidExpression("index " + name + " occurs more than twice");
    if (occ[0].up == occ[1].up)
      throw InvalidExpression("dummy index " + name + " must appear once up and once down");
    entries.push_back({abstract_index(name, true), 1});
    entries.push_back({abstract_index(name, false), 1});
  }
  for (const auto& [key, count] : components)
    for (std::size_t k = 0; k < count; ++k) entries.push_back({component_index(key.first, key.second), 0});

  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    const int ta = detail::tier(a.atom), tb = detail::tier(b.atom);
    if (ta != tb) return ta < tb;
    if (a.role != b.role) return a.role < b.role;
    if (a.atom.is_component()) {
      if (a.atom.value != b.atom.value) return a.atom.value < b.atom.value;
    } else if (a.atom.name != b.atom.name) {
      return a.atom.name < b.atom.name;
    }
    return a.atom.up && !b.atom.up;
  });

  CanonicalConfiguration c;
  c.descriptor.degree = p.degree;
  std::map<std::string, std::size_t> set_of_space;
  std::map<std::pair<long, bool>, std::size_t> repeated_of;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    const auto pos = static_cast<Point>(k);
    c.c0.push_back(e.atom);
    if (e.role == 1) {
      if (!e.atom.up) continue;  // the partner follows immediately
      const auto& space = reg.space_of(e.atom.name);
      auto [it, fresh] = set_of_space.try_emplace(space.name, c.descriptor.dummy_sets.size());
      if (fresh) c.descriptor.dummy_sets.push_back({space.metric, {}, space.name});
      c.descriptor.dummy_sets[it->second].pairs.emplace_back(pos, pos + 1);
    } else if (e.atom.is_component() && components[{e.atom.value, e.atom.up}] > 1) {
      auto [it, fresh] = repeated_of.try_emplace({e.atom.value, e.atom.up}, c.descriptor.repeated_sets.size());
      if (fresh) c.descriptor.repeated_sets.emplace_back();
      c.descriptor.repeated_sets[it->second].positions.push_back(pos);
    } else {
      c.descriptor.free_positions.push_back(pos);
    }
  }
  return c;
}

/// g with slot s holding C0[g(s)]; sign +1.
inline SignedPermutation expression_to_perm(const TensorProduct& p, const CanonicalConfiguration& c) {
  std::map<std::tuple<bool, std::string, long, bool>, std::vector<Point>> where;
  for (std::size_t k = c.c0.size(); k-- > 0;) {
    const auto& a = c.c0[k];
    where[{a.is_component(), a.name, a.value, a.up}].push_back(static_cast<Point>(k));
  }
  std::vector<Point> img;
  for (const auto& f : p.factors)
    for (const auto& a : f.indices) {
      auto it = where.find({a.is_component(), a.name, a.value, a.up});
      if (it == where.end() || it->second.empty())
        throw InvalidExpression("index " + to_string(a) + " missing from the canonical index list");
      img.push_back(it->second.back());
      it->second.pop_back();
    }
  return SignedPermutation(std::move(img), 1);
}

/// Refills the slots with C0[p(s)]; the permutation's sign becomes the
/// monomial's sign.
inline Monomial perm_to_expression(const CanonicalResult& r, const TensorProduct& p,
                                   const CanonicalConfiguration& c) {
  Monomial m;
  if (r.is_zero()) {
    m.zero = true;
    return m;
  }
  const auto& perm = r.permutation();
  if (perm.degree() != p.degree) throw InvalidArgument("permutation degree does not match the product");
  m.sign = perm.sign();
  Point s = 0;
  for (const auto& f : p.factors) {
    Factor out{f.head, {}};
    for (std::size_t k = 0; k < f.indices.size(); ++k) out.indices.push_back(c.c0[perm[s++]]);
    m.factors.push_back(std::move(out));
  }
  return m;
}

inline Monomial canonicalize(const Monomial& m, const Registry& reg, const CanonOptions& opt = {},
                             CanonStats* stats = nullptr) {
  if (m.zero) return m;
  const auto product = make_product(m, reg);
  const auto config = build_canonical_configuration(product, reg);
  auto g = expression_to_perm(product, config);
  if (m.sign < 0) g = g.negated();
  const auto r = canonical_perm(g, build_product_sgs(product), config.descriptor, opt, stats);
  return perm_to_expression(r, product, config);
}

/// Termwise; no cancellation between terms.
inline Expression canonicalize(const Expression& e, const Registry& reg, const CanonOptions& opt = {},
                               CanonStats* stats = nullptr) {
  Expression out;
  for (const auto& t : e.terms) out.terms.push_back(canonicalize(t, reg, opt, stats));
  return out;
}

inline std::string canonicalize_expression(std::string_view text, const Registry& reg,
                                           const CanonOptions& opt = {}, CanonStats* stats = nullptr) {
  return to_string(canonicalize(parse_expression(text), reg, opt, stats));
}

}  // namespace permcanon::tensor
