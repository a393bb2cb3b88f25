#pragma once

// Shared helpers for eventually periodic digit strings over any alphabet.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gasket::detail {

inline std::size_t primitive_root_length(std::span<const std::uint8_t> w) {
  const std::size_t k = w.size();
  for (std::size_t p = 1; p < k; ++p) {
    if (k % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < k && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return k;
}

// Primitive period, then shortest preperiod.
inline void canonicalize(std::vector<std::uint8_t>& pre, std::vector<std::uint8_t>& per) {
  per.resize(primitive_root_length(per));
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
}

// Start index of the lexicographically least rotation (two-pointer method).
inline std::size_t least_rotation(std::span<const std::uint8_t> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto a = s[(i + k) % n];
    const auto b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) i += k + 1; else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace gasket::detail
