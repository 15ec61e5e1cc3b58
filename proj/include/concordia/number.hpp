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

// Exact integer and rational substrate plus the handful of integer
// number-theory helpers (roots, factorization, divisors) everything else
// is built on.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace concordia {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// "num/den" in lowest terms, or just "num" when the denominator is 1.
inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str(10);
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s == "-") throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return Integer(s, 10);
}

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

inline std::optional<std::int64_t> to_int64(const Integer& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

inline Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool is_odd(const Integer& z) { return mpz_odd_p(z.get_mpz_t()) != 0; }

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Floor of the square root; z must be nonnegative.
inline Integer isqrt(const Integer& z) {
  if (z < 0) throw std::domain_error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

// The exact nonnegative k-th root when z is a perfect k-th power. Negative z
// has a real root only for odd k.
inline std::optional<Integer> exact_root(const Integer& z, unsigned long k) {
  if (z < 0 && k % 2 == 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

inline std::optional<Integer> exact_sqrt(const Integer& z) {
  if (z < 0 || mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(z);
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_sqrt(Integer(q.get_num()));
  if (!num) return std::nullopt;
  auto den = exact_sqrt(Integer(q.get_den()));
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

inline bool is_square(const Rational& q) { return exact_sqrt(q).has_value(); }

struct PrimePower {
  Integer prime;
  unsigned long exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial-division factorization of |z|, primes ascending. Intended for the
// coefficient sizes this library works with (well below 10^18).
inline std::vector<PrimePower> factorize(const Integer& z) {
  if (z == 0) throw std::domain_error("factorize(0)");
  std::vector<PrimePower> out;
  Integer rest = abs(z);
  auto strip = [&](const Integer& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (Integer p = 5; p * p <= rest; p += 6) {
    strip(p);
    Integer p2 = p + 2;
    strip(p2);
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

inline std::vector<PrimePower> merge_factorizations(std::vector<PrimePower> a, const std::vector<PrimePower>& b) {
  for (const auto& pp : b) {
    auto it = std::find_if(a.begin(), a.end(), [&](const PrimePower& x) { return x.prime == pp.prime; });
    if (it == a.end()) {
      a.push_back(pp);
    } else {
      it->exponent += pp.exponent;
    }
  }
  std::sort(a.begin(), a.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
  return a;
}

// Positive divisors d with d^power | n, i.e. products of p^e with
// power*e <= v_p(n). power = 1 gives all divisors.
inline std::vector<Integer> power_divisors(const std::vector<PrimePower>& factors, unsigned long power = 1) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factors) {
    const auto max_e = e / power;
    const auto count = divs.size();
    Integer pk = 1;
    for (unsigned long i = 1; i <= max_e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::vector<Integer> divisors(const Integer& z) { return power_divisors(factorize(z), 1); }

// z = squarefree * root^2 with squarefree > 0 and root maximal.
struct SquarefreeSplit {
  Integer squarefree;
  Integer root;
};

inline SquarefreeSplit squarefree_split(const Integer& z) {
  SquarefreeSplit s{1, 1};
  for (const auto& [p, e] : factorize(z)) {
    if (e % 2 == 1) s.squarefree *= p;
    s.root *= pow(p, e / 2);
  }
  return s;
}

inline bool is_squarefree(const Integer& z) { return squarefree_split(z).root == 1; }

}  // namespace concordia
