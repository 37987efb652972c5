#pragma once

// Extended-images codec: a signed permutation of degree n travels as n+2
// 1-based integers, the last two being (n+1, n+2) for sign +1 and
// (n+2, n+1) for sign -1. This is the only place the tail is interpreted.

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "permcanon/signed_permutation.hpp"

namespace permcanon {

using ExtendedImages = std::vector<int>;

inline ExtendedImages encode_extended(const SignedPermutation& p) {
  ExtendedImages out = p.images_one_based();
  const int n = static_cast<int>(p.degree());
  if (p.sign() > 0) {
    out.push_back(n + 1);
    out.push_back(n + 2);
  } else {
    out.push_back(n + 2);
    out.push_back(n + 1);
  }
  return out;
}

inline SignedPermutation decode_extended(std::span<const int> ext) {
  if (ext.size() < 2) throw FormatError("extended images need at least 2 entries");
  const int n = static_cast<int>(ext.size()) - 2;
  int sign = 0;
  if (ext[n] == n + 1 && ext[n + 1] == n + 2)
    sign = 1;
  else if (ext[n] == n + 2 && ext[n + 1] == n + 1)
    sign = -1;
  else
    throw FormatError("extended images tail must be (" + std::to_string(n + 1) + "," +
                      std::to_string(n + 2) + ") or its swap");
  try {
    return SignedPermutation::from_images(ext.first(static_cast<std::size_t>(n)), sign);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("extended images: ") + e.what());
  }
}

inline SignedPermutation decode_extended(const ExtendedImages& ext) {
  return decode_extended(std::span<const int>(ext));
}

/// Compact text: whitespace-separated integers.
inline std::string to_compact_text(const ExtendedImages& ext) {
  std::string out;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ext[i]);
  }
  return out;
}

inline ExtendedImages from_compact_text(std::string_view text) {
  ExtendedImages out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw FormatError("non-integer token in compact text");
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw FormatError("non-integer token in compact text");
    out.push_back(v);
  }
  return out;
}

}  // namespace permcanon
