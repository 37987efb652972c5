#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permcanon/json_io.hpp"
#include "permcanon/notation.hpp"

namespace permcanon::tensor {

struct TensorHead {
  std::string name;
  std::size_t arity = 0;
  StrongGeneratingSet symmetry;  ///< slot symmetries, degree == arity
};

struct VectorSpace {
  std::string name;
  int metric = 1;                    ///< +1 symmetric, -1 antisymmetric, 0 none
  std::vector<std::string> indices;  ///< abstract index names; empty for the default space
};

/// Heads and vector spaces. Abstract indices not claimed by a space belong
/// to the first space.
class Registry {
 public:
  void add_head(TensorHead h) {
    if (h.symmetry.degree() != h.arity)
      throw InvalidArgument("head " + h.name + ": symmetry degree " + std::to_string(h.symmetry.degree()) +
                            " differs from arity " + std::to_string(h.arity));
    heads_[h.name] = std::move(h);
  }

  void add_space(VectorSpace s) {
    if (s.metric < -1 || s.metric > 1) throw InvalidArgument("space " + s.name + ": metric must be -1, 0 or 1");
    for (const auto& i : s.indices) space_of_[i] = spaces_.size();
    spaces_.push_back(std::move(s));
  }

  /// Head with the given name and arity; throws InvalidExpression otherwise.
  const TensorHead& head(const std::string& name, std::size_t arity) const {
    auto it = heads_.find(name);
    if (it == heads_.end()) throw InvalidExpression("unknown tensor head " + name);
    if (it->second.arity != arity)
      throw InvalidExpression("head " + name + " takes " + std::to_string(it->second.arity) + " indices, got " +
                              std::to_string(arity));
    return it->second;
  }

  bool has_head(const std::string& name) const { return heads_.contains(name); }

  const VectorSpace& space_of(const std::string& index) const {
    if (spaces_.empty()) throw InvalidExpression("no vector space registered");
    auto it = space_of_.find(index);
    return spaces_[it == space_of_.end() ? 0 : it->second];
  }

  const std::vector<VectorSpace>& spaces() const noexcept { return spaces_; }
  const std::map<std::string, TensorHead>& heads() const noexcept { return heads_; }

 private:
  std::map<std::string, TensorHead> heads_;
  std::vector<VectorSpace> spaces_;
  std::map<std::string, std::size_t> space_of_;
};

/// Slot symmetries from a base and generators of degree `arity`; the
/// generators need not be strong.
inline StrongGeneratingSet head_symmetry(std::size_t arity, const std::vector<Point>& base,
                                         const std::vector<SignedPermutation>& gens) {
  return schreier_sims(base, GeneratingSet(arity, gens));
}

/// R (Riemann), F (antisymmetric), g (symmetric metric), one space M with a
/// symmetric metric.
inline Registry default_registry() {
  Registry r;
  r.add_head({"R", 4,
              head_symmetry(4, {0, 2}, {cycles("-(1 2)", 4), cycles("-(3 4)", 4), cycles("(1 3)(2 4)", 4)})});
  r.add_head({"F", 2, head_symmetry(2, {0}, {cycles("-(1 2)", 2)})});
  r.add_head({"g", 2, head_symmetry(2, {0}, {cycles("(1 2)", 2)})});
  r.add_space({"M", 1, {}});
  return r;
}

/// {"heads": [{"name", "arity", "base", "genset"}],
///  "spaces": [{"name", "metric", "indices"?}]}
/// Generators are extended images of degree arity + 2. Without "spaces" a
/// single space M with a symmetric metric is assumed.
inline Registry registry_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("registry must be a JSON object");
  Registry r;
  try {
    for (const auto& h : permcanon::detail::require(j, "heads")) {
      const auto name = permcanon::detail::require(h, "name").get<std::string>();
      const auto arity = permcanon::detail::require(h, "arity").get<std::size_t>();
      std::vector<SignedPermutation> gens;
      if (h.contains("genset")) gens = generators_from_json(h["genset"], arity + 2);
      for (const auto& g : gens)
        if (g.degree() != arity) throw FormatError("head " + name + ": generator degree differs from arity");
      const auto base = permcanon::detail::to_points(permcanon::detail::optional_int_list(h, "base"), arity, "base");
      r.add_head({name, arity, head_symmetry(arity, base, gens)});
    }
    if (j.contains("spaces")) {
      for (const auto& s : j["spaces"]) {
        VectorSpace vs;
        vs.name = permcanon::detail::require(s, "name").get<std::string>();
        vs.metric = s.value("metric", 1);
        if (s.contains("indices")) vs.indices = s["indices"].get<std::vector<std::string>>();
        r.add_space(std::move(vs));
      }
    }
  } catch (const Json::exception& e) {
    throw FormatError(std::string("registry: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("registry: ") + e.what());
  }
  if (r.spaces().empty()) r.add_space({"M", 1, {}});
  return r;
}

}  // namespace permcanon::tensor
