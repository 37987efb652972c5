#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "permcanon/errors.hpp"

namespace permcanon {

/// 0-based point. All external formats (notations, JSON, text, CLI) are
/// 1-based; conversion happens at those boundaries only.
using Point = std::uint32_t;

/// Element of {+1,-1} x S_n. Permutations act on the right: the image of
/// point s is images[s], and product(a, b) applies a first, then b.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  /// Takes 0-based images; throws InvalidArgument unless they form a
  /// bijection of {0..n-1} and sign is +1 or -1.
  SignedPermutation(std::vector<Point> images, int sign = 1)
      : images_(std::move(images)), sign_(sign) {
    validate();
  }

  static SignedPermutation identity(std::size_t degree, int sign = 1) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return unchecked(std::move(img), sign);
  }

  /// 1-based images, as written in the Images[...] notation.
  static SignedPermutation from_images(std::span<const int> images, int sign = 1) {
    std::vector<Point> img;
    img.reserve(images.size());
    for (int v : images) {
      if (v < 1 || static_cast<std::size_t>(v) > images.size())
        throw InvalidArgument("image " + std::to_string(v) + " out of range 1.." +
                              std::to_string(images.size()));
      img.push_back(static_cast<Point>(v - 1));
    }
    return SignedPermutation(std::move(img), sign);
  }
  static SignedPermutation from_images(std::initializer_list<int> images, int sign = 1) {
    return from_images(std::span<const int>(images.begin(), images.size()), sign);
  }

  /// No validation. For kernels that build images known to be bijective.
  static SignedPermutation unchecked(std::vector<Point> images, int sign) {
    SignedPermutation p;
    p.images_ = std::move(images);
    p.sign_ = sign;
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  int sign() const noexcept { return sign_; }
  std::span<const Point> images() const noexcept { return images_; }
  Point operator[](Point p) const noexcept { return images_[p]; }

  std::vector<int> images_one_based() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = static_cast<int>(images_[i]) + 1;
    return out;
  }

  /// True when every point is fixed, whatever the sign.
  bool fixes_all_points() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }
  bool is_identity() const noexcept { return sign_ == 1 && fixes_all_points(); }

  SignedPermutation negated() const { return unchecked(images_, -sign_); }

  /// Smallest moved point, or degree() if none.
  Point smallest_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return static_cast<Point>(i);
    return static_cast<Point>(images_.size());
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  /// Images compared lexicographically first; on a tie, +1 sorts before -1
  /// (the extended encoding's tail n+1,n+2 precedes n+2,n+1).
  friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                          const SignedPermutation& b) {
    if (auto c = a.images_ <=> b.images_; c != 0) return c;
    return b.sign_ <=> a.sign_;
  }

 private:
  void validate() const {
    if (sign_ != 1 && sign_ != -1) throw InvalidArgument("sign must be +1 or -1");
    std::vector<bool> seen(images_.size(), false);
    for (Point v : images_) {
      if (v >= images_.size())
        throw InvalidArgument("image " + std::to_string(v + 1) + " out of range for degree " +
                              std::to_string(images_.size()));
      if (seen[v]) throw InvalidArgument("point " + std::to_string(v + 1) + " repeated in images");
      seen[v] = true;
    }
  }

  std::vector<Point> images_;
  int sign_ = 1;
};

inline void require_same_degree(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.degree() != b.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
}

/// result[i] = p2[p1[i]], sign p1.sign * p2.sign.
inline SignedPermutation product(const SignedPermutation& p1, const SignedPermutation& p2) {
  require_same_degree(p1, p2);
  std::vector<Point> img(p1.degree());
  const auto a = p1.images();
  const auto b = p2.images();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b[a[i]];
  return SignedPermutation::unchecked(std::move(img), p1.sign() * p2.sign());
}

inline SignedPermutation operator*(const SignedPermutation& p1, const SignedPermutation& p2) {
  return product(p1, p2);
}

inline SignedPermutation inverse(const SignedPermutation& p) {
  std::vector<Point> img(p.degree());
  const auto a = p.images();
  for (std::size_t i = 0; i < img.size(); ++i) img[a[i]] = static_cast<Point>(i);
  return SignedPermutation::unchecked(std::move(img), p.sign());
}

/// 1-based point in, 1-based image out.
inline int image_of(int point, const SignedPermutation& p) {
  if (point < 1 || static_cast<std::size_t>(point) > p.degree())
    throw InvalidArgument("point " + std::to_string(point) + " outside 1.." +
                          std::to_string(p.degree()));
  return static_cast<int>(p[static_cast<Point>(point - 1)]) + 1;
}

/// output[s] = list[p[s]]. With list = C0 (canonical index order) and p = g,
/// this yields the configuration C whose slot s holds C0[g(s)].
template <class T>
std::vector<T> permute_list(std::span<const T> list, const SignedPermutation& p) {
  if (list.size() != p.degree())
    throw InvalidArgument("list length " + std::to_string(list.size()) +
                          " does not match degree " + std::to_string(p.degree()));
  std::vector<T> out;
  out.reserve(list.size());
  for (std::size_t s = 0; s < list.size(); ++s) out.push_back(list[p[static_cast<Point>(s)]]);
  return out;
}

template <class T>
std::vector<T> permute_list(const std::vector<T>& list, const SignedPermutation& p) {
  return permute_list(std::span<const T>(list), p);
}

/// Inverse action: permute_list(unpermute_list(C, p), p) == C.
template <class T>
std::vector<T> unpermute_list(const std::vector<T>& list, const SignedPermutation& p) {
  if (list.size() != p.degree()) throw InvalidArgument("list length does not match degree");
  std::vector<T> out(list);
  for (std::size_t s = 0; s < list.size(); ++s) out[p[static_cast<Point>(s)]] = list[s];
  return out;
}

/// Permutation g with list[s] == stable_sorted(list)[g[s]], i.e.
/// permute_list(sorted, g) reproduces list. Equal elements keep their
/// relative order.
template <class T, class Compare = std::less<>>
SignedPermutation sorting_permutation(const std::vector<T>& list, Compare comp = {}) {
  std::vector<Point> order(list.size());
  std::iota(order.begin(), order.end(), Point{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Point a, Point b) { return comp(list[a], list[b]); });
  std::vector<Point> img(list.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) img[order[rank]] = static_cast<Point>(rank);
  return SignedPermutation::unchecked(std::move(img), 1);
}

}  // namespace permcanon

template <>
struct std::hash<permcanon::SignedPermutation> {
  std::size_t operator()(const permcanon::SignedPermutation& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.sign() + 2);
    for (auto v : p.images()) h = h * 1000003u ^ v;
    return h;
  }
};
