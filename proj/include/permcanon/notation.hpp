#pragma once

// The four interchangeable permutation notations. All of them are 1-based
// and carry an explicit sign; a leading minus (e.g. "-(1 2)") marks sign -1
// and is never derived from parity.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permcanon/signed_permutation.hpp"

namespace permcanon {

struct Images {
  std::vector<int> images;
  int sign = 1;
  friend bool operator==(const Images&, const Images&) = default;
};

/// Perm[{...}]: objects[i] is the object that ends up at position i.
struct Rearrangement {
  std::vector<int> objects;
  int sign = 1;
  friend bool operator==(const Rearrangement&, const Rearrangement&) = default;
};

/// Disjoint cycles. Degree is carried explicitly since fixed points are
/// omitted.
struct Cycles {
  std::size_t degree = 0;
  std::vector<std::vector<int>> cycles;
  int sign = 1;
  friend bool operator==(const Cycles&, const Cycles&) = default;
};

struct Rules {
  std::size_t degree = 0;
  std::vector<std::pair<int, int>> rules;
  int sign = 1;
  friend bool operator==(const Rules&, const Rules&) = default;
};

inline SignedPermutation to_permutation(const SignedPermutation& p) { return p; }

inline SignedPermutation to_permutation(const Images& x) {
  return SignedPermutation::from_images(std::span<const int>(x.images), x.sign);
}

inline SignedPermutation to_permutation(const Rearrangement& x) {
  return inverse(SignedPermutation::from_images(std::span<const int>(x.objects), x.sign));
}

inline SignedPermutation to_permutation(const Cycles& x) {
  std::vector<Point> img(x.degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(x.degree, false);
  for (const auto& cyc : x.cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int pt = cyc[k];
      if (pt < 1 || static_cast<std::size_t>(pt) > x.degree)
        throw InvalidArgument("cycle point " + std::to_string(pt) + " outside 1.." +
                              std::to_string(x.degree));
      if (used[pt - 1]) throw InvalidArgument("point " + std::to_string(pt) + " repeated in cycles");
      used[pt - 1] = true;
      img[pt - 1] = static_cast<Point>(cyc[(k + 1) % cyc.size()] - 1);
    }
  }
  return SignedPermutation(std::move(img), x.sign);
}

inline SignedPermutation to_permutation(const Rules& x) {
  std::vector<Point> img(x.degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(x.degree, false);
  for (auto [from, to] : x.rules) {
    if (from < 1 || to < 1 || static_cast<std::size_t>(from) > x.degree ||
        static_cast<std::size_t>(to) > x.degree)
      throw InvalidArgument("rule " + std::to_string(from) + "->" + std::to_string(to) +
                            " outside 1.." + std::to_string(x.degree));
    if (used[from - 1]) throw InvalidArgument("point " + std::to_string(from) + " has two rules");
    used[from - 1] = true;
    img[from - 1] = static_cast<Point>(to - 1);
  }
  return SignedPermutation(std::move(img), x.sign);
}

template <class To>
To from_permutation(const SignedPermutation& p);

template <>
inline SignedPermutation from_permutation<SignedPermutation>(const SignedPermutation& p) {
  return p;
}

template <>
inline Images from_permutation<Images>(const SignedPermutation& p) {
  return {p.images_one_based(), p.sign()};
}

template <>
inline Rearrangement from_permutation<Rearrangement>(const SignedPermutation& p) {
  return {inverse(p).images_one_based(), p.sign()};
}

/// Each cycle starts at its smallest point; cycles ordered by that point.
template <>
inline Cycles from_permutation<Cycles>(const SignedPermutation& p) {
  Cycles out{p.degree(), {}, p.sign()};
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    std::vector<int> cyc;
    for (Point q = start; !seen[q]; q = p[q]) {
      seen[q] = true;
      cyc.push_back(static_cast<int>(q) + 1);
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

/// Moved points only, listed in cycle order: {1->4, 4->3, 3->1, 5->6, 6->5}.
template <>
inline Rules from_permutation<Rules>(const SignedPermutation& p) {
  const Cycles c = from_permutation<Cycles>(p);
  Rules out{p.degree(), {}, p.sign()};
  for (const auto& cyc : c.cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k)
      out.rules.emplace_back(cyc[k], cyc[(k + 1) % cyc.size()]);
  return out;
}

/// Lossless conversion between any two notations.
template <class To, class From>
To translate(const From& x) {
  return from_permutation<To>(to_permutation(x));
}

/// "-(1 4 3)(5 6)"; the identity is "()".
inline std::string to_string(const Cycles& c) {
  std::ostringstream os;
  if (c.sign < 0) os << '-';
  if (c.cycles.empty()) os << "()";
  for (const auto& cyc : c.cycles) {
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) os << (k ? " " : "") << cyc[k];
    os << ')';
  }
  return os.str();
}

inline std::string to_cycles_string(const SignedPermutation& p) {
  return to_string(from_permutation<Cycles>(p));
}

inline std::ostream& operator<<(std::ostream& os, const SignedPermutation& p) {
  return os << to_cycles_string(p);
}

/// Parses "-(1 4 3)(5 6)" (commas also accepted as separators).
inline Cycles parse_cycles(std::string_view text, std::size_t degree) {
  Cycles out{degree, {}, 1};
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '-') {
    out.sign = -1;
    ++i;
  } else if (i < text.size() && text[i] == '+') {
    ++i;
  }
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidArgument("expected '(' in cycles \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidArgument("malformed cycles \"" + std::string(text) + "\"");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
    }
    if (cyc.size() > 1) out.cycles.push_back(std::move(cyc));
    skip_ws();
  }
  to_permutation(out);  // validates range and repeats
  return out;
}

/// Shorthand for tests and configuration: "-(1 2)" of the given degree.
inline SignedPermutation cycles(std::string_view text, std::size_t degree) {
  return to_permutation(parse_cycles(text, degree));
}

}  // namespace permcanon
