// Copyright 2026 The zerosum Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Naive reference implementations used as test oracles. They share no code
// with the library beyond plain integers.

#ifndef ZEROSUM_TESTS_ORACLES_H_
#define ZEROSUM_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint32_t>;

inline std::uint64_t Mod(std::int64_t v, std::uint32_t p) {
  return static_cast<std::uint64_t>(((v % p) + p) % p);
}

inline std::uint64_t PowMod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint32_t Inv(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(PowMod(a, p - 2, p));
}

// Masks x with sum_{i in x} a_i = alpha, in increasing numeric order.
inline std::vector<std::uint64_t> Solutions(const Vec& a, std::uint32_t p,
                                            std::uint32_t alpha = 0) {
  std::vector<std::uint64_t> out;
  const std::size_t n = a.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1) s += a[i];
    }
    if (s % p == alpha) out.push_back(m);
  }
  return out;
}

// Rank of integer rows over F_p by Gaussian elimination with Fermat inverses.
inline std::size_t Rank(std::vector<Vec> rows, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint32_t inv = Inv(rows[rank][c] % p, p);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * std::uint64_t{inv} % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::uint64_t f = rows[r][c] % p;
      for (std::size_t k = 0; k < width; ++k) {
        rows[r][k] = static_cast<std::uint32_t>(
            Mod(static_cast<std::int64_t>(rows[r][k]) -
                    static_cast<std::int64_t>(f * rows[rank][k] % p),
                p));
      }
    }
    ++rank;
  }
  return rank;
}

inline Vec Indicator(std::uint64_t m, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = m >> i & 1;
  return v;
}

inline std::size_t Dim(const Vec& a, std::uint32_t p) {
  std::vector<Vec> rows;
  for (std::uint64_t m : Solutions(a, p)) rows.push_back(Indicator(m, a.size()));
  return Rank(rows, p);
}

// Affine hull dimension: rank of differences from the first member.
inline std::size_t AffineDim(const Vec& a, std::uint32_t p, std::uint32_t alpha) {
  const auto sols = Solutions(a, p, alpha);
  std::vector<Vec> rows;
  const Vec base = Indicator(sols.at(0), a.size());
  for (std::uint64_t m : sols) {
    Vec v = Indicator(m, a.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = static_cast<std::uint32_t>(
          Mod(static_cast<std::int64_t>(v[i]) - base[i], p));
    }
    rows.push_back(v);
  }
  return Rank(rows, p);
}

// Nonempty solutions with no nonempty proper sub-solution.
inline std::vector<std::uint64_t> Minimal(const Vec& a, std::uint32_t p) {
  const auto sols = Solutions(a, p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t x : sols) {
    if (x == 0) continue;
    bool minimal = true;
    for (std::uint64_t y : sols) {
      if (y != 0 && y != x && (y & ~x) == 0) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

inline std::set<std::uint32_t> Subsums(const Vec& a, std::uint32_t p) {
  std::set<std::uint32_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (m >> i & 1) s += a[i];
    }
    out.insert(static_cast<std::uint32_t>(s % p));
  }
  return out;
}

// Orbit key under permutation and scaling: the least sorted multiple.
inline Vec OrbitKey(const Vec& a, std::uint32_t p) {
  Vec best;
  for (std::uint32_t l = 1; l < p; ++l) {
    Vec s;
    for (std::uint32_t v : a) s.push_back(static_cast<std::uint32_t>(std::uint64_t{v} * l % p));
    std::sort(s.begin(), s.end());
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Every orbit key of length n, by walking all sorted vectors.
inline std::set<Vec> AllOrbits(std::uint32_t p, std::size_t n, int filter) {
  std::set<Vec> out;
  Vec cur(n, 1);
  while (true) {
    std::uint64_t s = 0;
    for (auto v : cur) s += v;
    const bool zero = s % p == 0;
    if (filter == 0 || (filter == 1 && zero) || (filter == 2 && !zero)) {
      out.insert(OrbitKey(cur, p));
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == p - 1) --i;
    if (i == 0) break;
    const std::uint32_t v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < n; ++j) cur[j] = v;
  }
  return out;
}

inline std::uint64_t Binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Burnside count of multisets of size n over F_p^* up to scaling: an
// element of order d fixes the multisets constant on its (p-1)/d cycles.
inline std::uint64_t BurnsideOrbitCount(std::uint32_t p, std::size_t n) {
  const std::uint32_t m = p - 1;
  std::uint64_t total = 0;
  for (std::uint32_t d = 1; d <= m; ++d) {
    if (m % d != 0 || n % d != 0) continue;
    std::uint64_t phi = 0;
    for (std::uint32_t k = 1; k <= d; ++k) phi += std::gcd(k, d) == 1;
    total += phi * Binom(n / d + m / d - 1, n / d);
  }
  return total / m;
}

}  // namespace oracle

#endif  // ZEROSUM_TESTS_ORACLES_H_
