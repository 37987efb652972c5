#pragma once

// Benchmark instances and the timing harness: the antisymmetric chain, random
// fully contracted Riemann monomials, and the cyclic Riemann invariant whose
// candidate table grows exponentially.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>

#include "permcanon/tensor/frontend.hpp"

namespace permcanon::bench {

using tensor::Factor;
using tensor::Monomial;
using tensor::abstract_index;

struct BenchRecord {
  std::string experiment;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string result;  ///< "zero", "nonzero" or "resource-limit"
  std::uint64_t micros = 0;
  std::size_t peak = 0;

  friend auto operator<=>(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr const char* kCsvHeader = "experiment,n,seed,result,micros,peak";

inline void write_csv(std::ostream& os, std::vector<BenchRecord> records) {
  std::sort(records.begin(), records.end());
  os << kCsvHeader << '\n';
  for (const auto& r : records)
    os << r.experiment << ',' << r.n << ',' << r.seed << ',' << r.result << ',' << r.micros << ',' << r.peak << '\n';
}

/// F[a1,-a2] F[a2,-a3] ... F[an,-a1]
inline Monomial antisymmetric_chain(std::size_t n) {
  Monomial m;
  for (std::size_t i = 1; i <= n; ++i)
    m.factors.push_back({"F", {abstract_index("a" + std::to_string(i)),
                               abstract_index("a" + std::to_string(i % n + 1), false)}});
  return m;
}

/// R[a1,b1,-a2,-b2] R[a2,b2,-a3,-b3] ... R[an,bn,-a1,-b1]
inline Monomial hard_cycle(std::size_t n) {
  Monomial m;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto j = std::to_string(i % n + 1);
    const auto k = std::to_string(i);
    m.factors.push_back({"R", {abstract_index("a" + k), abstract_index("b" + k), abstract_index("a" + j, false),
                               abstract_index("b" + j, false)}});
  }
  return m;
}

/// Uniform integer in [0, bound) by rejection on raw 64-bit draws, so that
/// instances do not depend on the standard library's distributions.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

/// Product of n Riemann tensors with all 4n slots contracted by a uniformly
/// random perfect matching; each pair gets a random up/down assignment.
inline Monomial random_riemann(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t slots = 4 * n;
  std::vector<std::size_t> order(slots);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = slots; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  std::vector<tensor::IndexAtom> at(slots);
  for (std::size_t p = 0; p < slots / 2; ++p) {
    const auto name = "d" + std::to_string(p + 1);
    const bool first_up = uniform_below(rng, 2) == 0;
    at[order[2 * p]] = abstract_index(name, first_up);
    at[order[2 * p + 1]] = abstract_index(name, !first_up);
  }
  Monomial m;
  for (std::size_t f = 0; f < n; ++f) m.factors.push_back({"R", {at.begin() + 4 * f, at.begin() + 4 * f + 4}});
  return m;
}

/// Seed of instance k at size n derived from a master seed (splitmix64).
inline std::uint64_t instance_seed(std::uint64_t master, std::size_t n, std::size_t k) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (n * 1'000'003ULL + k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Canonicalizes one monomial and times it on a monotonic clock (at least
/// one microsecond). A ResourceLimitError is recorded, not propagated, when
/// `record_limits` is set.
inline BenchRecord run_instance(const std::string& experiment, std::size_t n, std::uint64_t seed, const Monomial& m,
                                const tensor::Registry& reg, const CanonOptions& opt, bool record_limits = false) {
  BenchRecord rec{experiment, n, seed, {}, 0, 0};
  CanonStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto out = tensor::canonicalize(m, reg, opt, &stats);
    rec.result = out.zero ? "zero" : "nonzero";
  } catch (const ResourceLimitError&) {
    if (!record_limits) throw;
    rec.result = "resource-limit";
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.micros = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()));
  rec.peak = stats.peak_candidates;
  return rec;
}

/// Chains for n = n_min..n_max, `reps` timings each. Throws std::logic_error
/// if a chain is zero for even n or nonzero for odd n.
inline std::vector<BenchRecord> antisymmetric_chain_bench(std::size_t n_max, std::size_t reps = 1,
                                                          const CanonOptions& opt = {}, std::size_t n_min = 3) {
  if (n_min < 2 || n_max < n_min) throw InvalidArgument("chain benchmark needs 2 <= n_min <= n_max");
  const auto reg = tensor::default_registry();
  std::vector<BenchRecord> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const auto m = antisymmetric_chain(n);
    for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
      auto rec = run_instance("chain", n, r, m, reg, opt);
      if ((rec.result == "zero") != (n % 2 == 1))
        throw std::logic_error("antisymmetric chain n=" + std::to_string(n) + " gave " + rec.result);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

inline std::vector<BenchRecord> random_riemann_bench(std::size_t n_max, std::size_t per_n, std::uint64_t seed,
                                                     const CanonOptions& opt = {}, std::size_t n_min = 1) {
  if (per_n < 1) throw InvalidArgument("per_n must be at least 1");
  const auto reg = tensor::default_registry();
  std::vector<BenchRecord> out;
  for (std::size_t n = n_min; n <= n_max; ++n)
    for (std::size_t k = 0; k < per_n; ++k) {
      const auto s = instance_seed(seed, n, k);
      out.push_back(run_instance("riemann", n, s, random_riemann(n, s), reg, opt));
    }
  return out;
}

/// Cyclic invariants for n = 2..n_max. Sizes past the memory budget are
/// recorded as "resource-limit" and end the sweep.
inline std::vector<BenchRecord> hard_cycle_bench(std::size_t n_max, const CanonOptions& opt = {}) {
  const auto reg = tensor::default_registry();
  std::vector<BenchRecord> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    out.push_back(run_instance("hard", n, 0, hard_cycle(n), reg, opt, true));
    if (out.back().result == "resource-limit") break;
  }
  return out;
}

/// Least-squares slope of log(micros) against log(n) over records with
/// n >= n_from.
inline double loglog_slope(const std::vector<BenchRecord>& records, std::size_t n_from = 1) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const auto& r : records) {
    if (r.n < n_from) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(static_cast<double>(r.micros));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 2) throw InvalidArgument("slope fit needs at least two records");
  const double denom = static_cast<double>(k) * sxx - sx * sx;
  if (denom == 0) throw InvalidArgument("slope fit needs at least two distinct n");
  return (static_cast<double>(k) * sxy - sx * sy) / denom;
}

}  // namespace permcanon::bench
