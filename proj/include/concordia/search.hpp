// Copyright 2026 The Concordia Authors
//
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

#pragma once

// Brute-force point finding on E(m,n): a Nagell-Lutz torsion oracle that is
// independent of the closed-form classification, and a naive height-bounded
// search for rational points.

#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "concordia/curve.hpp"
#include "concordia/parallel.hpp"

namespace concordia {

namespace detail {

using i128 = __int128;

inline constexpr int kI128SafeBits = 120;

inline bool fits_bits(const Integer& z, int bits) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= static_cast<std::size_t>(bits); }

inline i128 to_i128(const Integer& z) {
  if (!fits_bits(z, 126)) throw std::overflow_error("integer too large for 128-bit fast path");
  Integer a = abs(z);
  Integer lo_part = a & Integer("18446744073709551615");
  Integer hi_part = a >> 64;
  auto lo = static_cast<unsigned __int128>(mpz_get_ui(lo_part.get_mpz_t()));
  auto hi = static_cast<unsigned __int128>(mpz_get_ui(hi_part.get_mpz_t()));
  auto v = static_cast<i128>((hi << 64) | lo);
  return z < 0 ? -v : v;
}

inline Integer from_i128(i128 v) {
  bool neg = v < 0;
  auto u = static_cast<unsigned __int128>(neg ? -v : v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

// Fast rejection of non-squares by quadratic residues mod 64, 63, 65, 11.
inline bool maybe_square(std::uint64_t r64, std::uint64_t r63, std::uint64_t r65, std::uint64_t r11) {
  static const auto table = [] {
    struct T {
      bool m64[64]{}, m63[63]{}, m65[65]{}, m11[11]{};
    } t;
    for (int i = 0; i < 64; ++i) t.m64[(i * i) % 64] = true;
    for (int i = 0; i < 63; ++i) t.m63[(i * i) % 63] = true;
    for (int i = 0; i < 65; ++i) t.m65[(i * i) % 65] = true;
    for (int i = 0; i < 11; ++i) t.m11[(i * i) % 11] = true;
    return t;
  }();
  return table.m64[r64] && table.m63[r63] && table.m65[r65] && table.m11[r11];
}

inline bool exact_sqrt_i128(i128 v, i128& root) {
  if (v < 0) return false;
  auto uv = static_cast<unsigned __int128>(v);
  if (!maybe_square(static_cast<std::uint64_t>(uv % 64), static_cast<std::uint64_t>(uv % 63),
                    static_cast<std::uint64_t>(uv % 65), static_cast<std::uint64_t>(uv % 11))) {
    return false;
  }
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return false;
  root = r;
  return true;
}

inline bool exact_sqrt_z(const Integer& v, Integer& root) {
  if (v < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return true;
}

// Integer x in [-bound, bound] with x(x+m)(x+n) == target. crit_lo/crit_hi
// approximate the two critical points of the cubic to within 1; f is
// monotone outside a +-2 window around each.
template <class T>
void integer_roots(const T& m, const T& n, const T& target, const T& bound, const T& crit_lo, const T& crit_hi,
                   std::vector<T>& out) {
  auto f = [&](const T& x) -> T { return T(x * (x + m) * (x + n)); };
  auto search = [&](T lo, T hi, bool increasing) {
    if (lo > hi) return;
    // first x with f(x) >= target (increasing) or f(x) <= target (decreasing)
    while (lo < hi) {
      T mid = lo + T((hi - lo) / 2);
      T v = f(mid);
      if (increasing ? (v >= target) : (v <= target)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    if (f(lo) == target) out.push_back(lo);
  };
  T lo_window = crit_lo - 2;
  T hi_window = crit_hi + 2;
  search(T(-bound), T(lo_window - 1), true);
  search(T(crit_lo + 3), T(crit_hi - 3), false);
  search(T(hi_window + 1), bound, true);
  for (T x = lo_window; x <= crit_lo + 2; x += 1) {
    if (x >= -bound && x <= bound && f(x) == target) out.push_back(x);
  }
  for (T x = crit_hi - 2; x <= hi_window; x += 1) {
    if (x > crit_lo + 2 && x >= -bound && x <= bound && f(x) == target) out.push_back(x);
  }
}

inline Integer icbrt_ceil(const Integer& z) {
  Integer r;
  mpz_root(r.get_mpz_t(), z.get_mpz_t(), 3);
  while (r * r * r < z) ++r;
  return r;
}

}  // namespace detail

// Nagell-Lutz oracle: torsion points are integral with y = 0 or y | m n (m-n)
// (equivalently y^2 | disc). Every y-candidate is solved for integral x
// exactly; survivors are kept when order_of is finite.
inline std::vector<Point> torsion_oracle(const Curve& c, unsigned jobs = 1) {
  std::vector<Point> out{Point::infinity()};
  for (const auto& t : c.two_torsion()) out.push_back(t);

  const Integer& m = c.m();
  const Integer& n = c.n();
  auto factors = merge_factorizations(merge_factorizations(factorize(m), factorize(n)), factorize(Integer(m - n)));
  const auto ys = power_divisors(factors);
  const Integer big_n = c.discriminant_root();

  const Integer bound = std::max(abs(m), abs(n)) + detail::icbrt_ceil(Integer(big_n * big_n)) + 2;
  const Integer s0 = isqrt(Integer(m * m - m * n + n * n));
  const Integer a2 = m + n;
  // trunc division; within 1 of the real critical points
  const Integer crit_lo = Integer(-a2 - s0) / 3;
  const Integer crit_hi = Integer(-a2 + s0) / 3;

  const bool fast = detail::fits_bits(bound, 40) && detail::fits_bits(big_n, 60);

  std::mutex mu;
  parallel_for(ys.size(), jobs, [&](std::size_t i) {
    const Integer& y = ys[i];
    std::vector<Integer> xs;
    if (fast) {
      using detail::i128;
      std::vector<i128> roots;
      detail::integer_roots<i128>(detail::to_i128(m), detail::to_i128(n), detail::to_i128(Integer(y * y)),
                                  detail::to_i128(bound), detail::to_i128(crit_lo), detail::to_i128(crit_hi), roots);
      for (auto r : roots) xs.push_back(detail::from_i128(r));
    } else {
      detail::integer_roots<Integer>(m, n, Integer(y * y), bound, crit_lo, crit_hi, xs);
    }
    std::vector<Point> found;
    for (const auto& x : xs) {
      for (const Integer& sy : {y, Integer(-y)}) {
        Point p = c.point(Rational(x), Rational(sy));
        if (order_of(p, c)) found.push_back(p);
      }
    }
    if (!found.empty()) {
      std::lock_guard lock(mu);
      out.insert(out.end(), found.begin(), found.end());
    }
  });
  sort_points(out);
  return out;
}

// Every affine point with x = u/w^2, gcd(u,w) = 1, |u| <= H, w^2 <= H.
inline std::vector<Point> bounded_point_search(const Curve& c, const Integer& height, unsigned jobs = 1) {
  if (height < 1) throw std::invalid_argument("search bound must be >= 1");
  auto h64 = to_int64(height);
  if (!h64 || *h64 > (std::int64_t{1} << 40)) throw std::invalid_argument("search bound too large");
  const std::int64_t h = *h64;
  const auto w_max = static_cast<std::int64_t>(mpz_class(isqrt(height)).get_si());

  // |u (u + m w^2)(u + n w^2)| <= H^3 (1+|m|)(1+|n|)
  const Integer worst = height * height * height * (abs(c.m()) + 1) * (abs(c.n()) + 1);
  const bool fast = detail::fits_bits(worst, detail::kI128SafeBits);

  constexpr std::int64_t kChunk = 2048;
  const std::int64_t span = 2 * h + 1;
  const auto chunks = static_cast<std::size_t>((span + kChunk - 1) / kChunk);
  std::vector<std::vector<Point>> found(chunks);

  parallel_for(chunks, jobs, [&](std::size_t ci) {
    const std::int64_t u_lo = -h + static_cast<std::int64_t>(ci) * kChunk;
    const std::int64_t u_hi = std::min(h, u_lo + kChunk - 1);
    auto& dst = found[ci];
    if (fast) {
      using detail::i128;
      const i128 m = detail::to_i128(c.m());
      const i128 n = detail::to_i128(c.n());
      for (std::int64_t w = 1; w <= w_max; ++w) {
        const i128 w2 = static_cast<i128>(w) * w;
        const i128 mw = m * w2;
        const i128 nw = n * w2;
        for (std::int64_t u = u_lo; u <= u_hi; ++u) {
          if (std::gcd(u, w) != 1) continue;
          const i128 v = static_cast<i128>(u) * (u + mw) * (u + nw);
          i128 root;
          if (v < 0 || !detail::exact_sqrt_i128(v, root)) continue;
          const Rational x = make_rational(Integer(static_cast<long>(u)), Integer(static_cast<long>(w * w)));
          const Rational y = make_rational(detail::from_i128(root), Integer(static_cast<long>(w * w * w)));
          dst.push_back(c.point(x, y));
          if (root != 0) dst.push_back(c.point(x, -y));
        }
      }
    } else {
      Integer v, root;
      for (std::int64_t w = 1; w <= w_max; ++w) {
        const Integer w2 = Integer(static_cast<long>(w)) * w;
        const Integer mw = c.m() * w2;
        const Integer nw = c.n() * w2;
        for (std::int64_t u = u_lo; u <= u_hi; ++u) {
          if (std::gcd(u, w) != 1) continue;
          const Integer uz(static_cast<long>(u));
          v = uz * (uz + mw) * (uz + nw);
          if (!detail::exact_sqrt_z(v, root)) continue;
          const Rational x = make_rational(uz, w2);
          const Rational y = make_rational(root, Integer(w2 * w));
          dst.push_back(c.point(x, y));
          if (root != 0) dst.push_back(c.point(x, -y));
        }
      }
    }
  });

  std::vector<Point> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  sort_points(out);
  return out;
}

}  // namespace concordia
