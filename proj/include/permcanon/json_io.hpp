#pragma once

// JSON forms of permutations, generating sets, SGSs and canonicalization
// requests. Permutations always travel as 1-based extended images.
//
// Canonicalization request (field names follow the C interface):
//   {"perm": [...], "n": 10, "SGSQ": 1, "base": [1,3,5,7],
//    "GS": [[...], ...] or flat with "m", "frees": [1,2],
//    "vds": [4], "dummies": [3,4,5,6], "mQ": [1], "vrs": [2], "repes": [7,8]}
// Response: {"cperm": [...]} or {"zero": true}.

#include <optional>

#include "json.hpp"  // nlohmann/json, vendored

#include "permcanon/canonicalize.hpp"
#include "permcanon/extended_images.hpp"

namespace permcanon {

using Json = nlohmann::json;

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw FormatError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline std::vector<int> optional_int_list(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  return int_list(*it, key);
}

inline Point to_point(int v, std::size_t degree, const char* what) {
  if (v < 1 || static_cast<std::size_t>(v) > degree)
    throw FormatError(std::string(what) + " entry " + std::to_string(v) + " outside 1.." + std::to_string(degree));
  return static_cast<Point>(v - 1);
}

inline std::vector<Point> to_points(const std::vector<int>& v, std::size_t degree, const char* what) {
  std::vector<Point> out;
  for (int x : v) out.push_back(to_point(x, degree, what));
  return out;
}

}  // namespace detail

inline Json to_json(const SignedPermutation& p) { return Json(encode_extended(p)); }

inline SignedPermutation perm_from_json(const Json& j) { return decode_extended(detail::int_list(j, "permutation")); }

/// Generators as an array of extended-image arrays, or as one flat array
/// cut into pieces of `extended_degree` entries.
inline std::vector<SignedPermutation> generators_from_json(const Json& j, std::optional<std::size_t> extended_degree) {
  if (!j.is_array()) throw FormatError("generating set must be an array");
  std::vector<SignedPermutation> out;
  if (!j.empty() && j.front().is_array()) {
    for (const auto& g : j) out.push_back(perm_from_json(g));
  } else {
    const auto flat = detail::int_list(j, "GS");
    if (!extended_degree)
      throw FormatError("a flat generating set needs \"n\", the extended degree");
    const std::size_t m = *extended_degree;
    if (m < 2 || flat.size() % m != 0)
      throw FormatError("flat generating set length " + std::to_string(flat.size()) +
                        " is not a multiple of n = " + std::to_string(m));
    for (std::size_t k = 0; k < flat.size(); k += m)
      out.push_back(decode_extended(std::span<const int>(flat).subspan(k, m)));
  }
  return out;
}

namespace detail {

inline std::optional<std::size_t> extended_degree_field(const Json& j) {
  auto it = j.find("n");
  if (it == j.end()) return std::nullopt;
  if (!it->is_number_integer() || it->get<long long>() < 2) throw FormatError("\"n\" must be an integer >= 2");
  return it->get<std::size_t>();
}

inline const Json& genset_field(const Json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (j.contains("genset")) return j["genset"];
  if (j.contains("GS")) return j["GS"];
  throw FormatError("missing field \"genset\" (or \"GS\")");
}

inline std::size_t common_degree(const std::vector<SignedPermutation>& gens, std::optional<std::size_t> ext) {
  std::optional<std::size_t> deg;
  if (ext) deg = *ext - 2;
  for (const auto& g : gens) {
    if (deg && g.degree() != *deg)
      throw FormatError("generator of degree " + std::to_string(g.degree()) + " where " + std::to_string(*deg) +
                        " was expected");
    deg = g.degree();
  }
  if (!deg) throw FormatError("cannot determine the degree: give \"n\" or at least one generator");
  return *deg;
}

}  // namespace detail

/// {"genset": [...]} (or "GS"), with optional "n" = degree + 2.
inline GeneratingSet generating_set_from_json(const Json& j) {
  const auto ext = detail::extended_degree_field(j);
  const auto gens = generators_from_json(detail::genset_field(j), ext);
  return GeneratingSet(detail::common_degree(gens, ext), gens);
}

/// {"base": [...], "genset": [...]}; a sign-degenerate group lists -id
/// among its generators so that it survives a round trip.
inline Json to_json(const StrongGeneratingSet& sgs) {
  Json base = Json::array();
  for (Point b : sgs.base()) base.push_back(b + 1);
  Json gens = Json::array();
  for (const auto& g : sgs.generators()) gens.push_back(to_json(g));
  if (sgs.sign_degenerate()) gens.push_back(to_json(SignedPermutation::identity(sgs.degree(), -1)));
  return {{"base", base}, {"genset", gens}};
}

/// Takes the generators as strong for the given base (checked only
/// structurally).
inline StrongGeneratingSet sgs_from_json(const Json& j) {
  const auto ext = detail::extended_degree_field(j);
  const auto gens = generators_from_json(detail::genset_field(j), ext);
  const std::size_t n = detail::common_degree(gens, ext);
  auto base = detail::to_points(detail::int_list(detail::require(j, "base"), "base"), n, "base");
  try {
    return StrongGeneratingSet(n, std::move(base), gens);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("SGS: ") + e.what());
  }
}

/// An SGS when "base" is present, otherwise Schreier-Sims over the
/// generating set.
inline StrongGeneratingSet group_from_json(const Json& j) {
  if (j.is_object() && j.contains("base")) return sgs_from_json(j);
  return schreier_sims({}, generating_set_from_json(j));
}

inline Json order_to_json(const GroupOrder& o) { return {{"order", o.str()}}; }

struct CanonRequest {
  SignedPermutation perm;
  StrongGeneratingSet group;
  SymmetryDescriptor descriptor;
};

inline CanonRequest canon_request_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("canonicalization request must be a JSON object");
  CanonRequest r;
  r.perm = perm_from_json(detail::require(j, "perm"));
  const std::size_t n = r.perm.degree();
  if (auto ext = detail::extended_degree_field(j); ext && *ext != n + 2)
    throw FormatError("\"n\" is " + std::to_string(*ext) + " but perm has " + std::to_string(n + 2) + " entries");

  int sgsq = 1;
  if (auto it = j.find("SGSQ"); it != j.end()) {
    if (!it->is_number_integer() || (it->get<int>() != 0 && it->get<int>() != 1))
      throw FormatError("\"SGSQ\" must be 0 or 1");
    sgsq = it->get<int>();
  }
  const auto gens = generators_from_json(detail::genset_field(j), n + 2);
  for (const auto& g : gens)
    if (g.degree() != n) throw FormatError("generator degree differs from perm degree");
  if (sgsq == 1) {
    auto base = detail::to_points(detail::optional_int_list(j, "base"), n, "base");
    try {
      r.group = StrongGeneratingSet(n, std::move(base), gens);
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("SGS: ") + e.what());
    }
  } else {
    const auto base = detail::to_points(detail::optional_int_list(j, "base"), n, "base");
    r.group = schreier_sims(base, GeneratingSet(n, gens));
  }

  auto& d = r.descriptor;
  d.degree = n;
  d.free_positions = detail::to_points(detail::optional_int_list(j, "frees"), n, "frees");

  const auto dummies = detail::to_points(detail::optional_int_list(j, "dummies"), n, "dummies");
  auto vds = detail::optional_int_list(j, "vds");
  auto mq = detail::optional_int_list(j, "mQ");
  if (vds.empty() && !dummies.empty()) vds = {static_cast<int>(dummies.size())};
  if (mq.empty() && !vds.empty()) mq.assign(vds.size(), 1);
  if (mq.size() != vds.size()) throw FormatError("\"mQ\" needs one entry per dummy set in \"vds\"");
  std::size_t k = 0;
  for (std::size_t s = 0; s < vds.size(); ++s) {
    if (vds[s] < 0 || vds[s] % 2 != 0) throw FormatError("dummy-set lengths in \"vds\" must be even");
    if (k + static_cast<std::size_t>(vds[s]) > dummies.size())
      throw FormatError("\"vds\" lengths exceed the \"dummies\" list");
    DummySet ds;
    ds.metric = mq[s];
    for (int i = 0; i < vds[s]; i += 2, k += 2) ds.pairs.emplace_back(dummies[k], dummies[k + 1]);
    d.dummy_sets.push_back(std::move(ds));
  }
  if (k != dummies.size()) throw FormatError("\"vds\" lengths do not add up to the \"dummies\" list");

  const auto repes = detail::to_points(detail::optional_int_list(j, "repes"), n, "repes");
  auto vrs = detail::optional_int_list(j, "vrs");
  if (vrs.empty() && !repes.empty()) vrs = {static_cast<int>(repes.size())};
  k = 0;
  for (int len : vrs) {
    if (len < 0 || k + static_cast<std::size_t>(len) > repes.size())
      throw FormatError("\"vrs\" lengths exceed the \"repes\" list");
    RepeatedSet rs;
    for (int i = 0; i < len; ++i) rs.positions.push_back(repes[k++]);
    d.repeated_sets.push_back(std::move(rs));
  }
  if (k != repes.size()) throw FormatError("\"vrs\" lengths do not add up to the \"repes\" list");

  try {
    d.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  return r;
}

inline Json to_json(const CanonicalResult& r) {
  if (r.is_zero()) return {{"zero", true}};
  return {{"cperm", to_json(r.permutation())}};
}

inline Json run_canon_request(const Json& request, const CanonOptions& opt = {}, CanonStats* stats = nullptr) {
  const auto r = canon_request_from_json(request);
  return to_json(canonical_perm(r.perm, r.group, r.descriptor, opt, stats));
}

}  // namespace permcanon
