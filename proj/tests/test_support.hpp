#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing
// here calls the operation it is used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "boolmeas/algebras.hpp"
#include "boolmeas/clopen.hpp"
#include "boolmeas/rational.hpp"

namespace boolmeas::testing {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

inline ClopenSet iv(std::int64_t n0, std::int64_t d0, std::int64_t n1, std::int64_t d1) {
  return ClopenSet::interval(q(n0, d0), q(n1, d1));
}

inline ClopenSet clopen(std::initializer_list<std::pair<Rational, Rational>> pieces) {
  std::vector<Interval> raw;
  for (const auto& [lo, hi] : pieces) raw.push_back({lo, hi});
  return normalize(raw);
}

// Random canonical clopen set with endpoints in (1/den) Z for a random den
// from `denominators`.
inline ClopenSet random_clopen(std::mt19937_64& rng, const std::vector<std::int64_t>& denominators = {2, 3, 4, 6, 8, 12, 16}) {
  const std::int64_t den = denominators[rng() % denominators.size()];
  std::vector<Interval> raw;
  const int pieces = static_cast<int>(rng() % 4);
  for (int i = 0; i < pieces; ++i) {
    std::int64_t a = static_cast<std::int64_t>(rng() % (den + 1));
    std::int64_t b = static_cast<std::int64_t>(rng() % (den + 1));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    raw.push_back({q(a, den), q(b, den)});
  }
  return normalize(raw);
}

// Union of random depth-`depth` dyadic cylinders.
inline ClopenSet random_dyadic(std::mt19937_64& rng, unsigned depth) {
  std::vector<Interval> raw;
  const std::uint64_t cells = std::uint64_t{1} << depth;
  for (std::uint64_t k = 0; k < cells; ++k) {
    if (rng() % 2) raw.push_back({q(static_cast<std::int64_t>(k), static_cast<std::int64_t>(cells)),
                                  q(static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(cells))});
  }
  return normalize(raw);
}

// Grid of sample points k / den, k = 0..den-1, plus midpoints between them.
inline std::vector<Rational> grid(std::int64_t den) {
  std::vector<Rational> pts;
  for (std::int64_t k = 0; k < 2 * den; ++k) pts.push_back(q(k, 2 * den));
  return pts;
}

// Naive membership in a raw list of half-open intervals.
inline bool in_union(const std::vector<Interval>& pieces, const Rational& x) {
  for (const auto& p : pieces) {
    if (p.lo <= x && x < p.hi) return true;
  }
  return false;
}

// Doubling map T(x) = 2x mod 1.
inline Rational doubling(const Rational& x) {
  Rational y = 2 * x;
  return y >= 1 ? y - 1 : y;
}

// Binary digit n (0-based) of x in [0,1).
inline unsigned digit(const Rational& x, unsigned n) {
  Rational y = x;
  for (unsigned i = 0; i < n; ++i) y = doubling(y);
  return y >= q(1, 2) ? 1U : 0U;
}

// x with binary digit n flipped.
inline Rational flip_digit(const Rational& x, unsigned n) {
  const Rational h = dyadic(n + 1);
  return digit(x, n) ? x - h : x + h;
}

inline CantorClopen random_cantor(std::mt19937_64& rng, unsigned max_index = 4) {
  std::vector<unsigned> support;
  for (unsigned i = 0; i < max_index; ++i) {
    if (rng() % 2) support.push_back(i);
  }
  std::vector<std::uint64_t> patterns;
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << support.size()); ++p) {
    if (rng() % 2) patterns.push_back(p);
  }
  return CantorClopen(std::move(support), std::move(patterns));
}

inline FiniteCofinite random_finite_cofinite(std::mt19937_64& rng) {
  std::vector<std::uint64_t> pts;
  const int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) pts.push_back(rng() % 8);
  return FiniteCofinite::of(std::move(pts), rng() % 2 == 0);
}

// Solves the square system m x = rhs by Gaussian elimination over the
// rationals; empty when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// max over probability vectors mu of min_i mu(family_i), by enumerating the
// vertices of {(mu, t) : t <= mu(A_i), mu >= 0, sum mu = 1}.
inline Rational kelley_vertex_oracle(unsigned k, const std::vector<FiniteElement>& family) {
  // inequality rows over (mu_0..mu_{k-1}, t), each read as row.x >= 0
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : family) {
    std::vector<Rational> r(k + 1, Rational(0));
    for (unsigned i = 0; i < k; ++i) r[i] = a.contains(i) ? 1 : 0;
    r[k] = -1;
    rows.push_back(r);
  }
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Rational> r(k + 1, Rational(0));
    r[i] = 1;
    rows.push_back(r);
  }
  Rational best = -1;
  const std::size_t m = rows.size();
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<std::vector<Rational>> sys;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) {
        sys.push_back(rows[i]);
        rhs.push_back(0);
      }
    }
    std::vector<Rational> sum(k + 1, Rational(1));
    sum[k] = 0;
    sys.push_back(sum);
    rhs.push_back(1);
    const auto x = solve_square(sys, rhs);
    if (!x) continue;
    bool feasible = true;
    for (const auto& r : rows) {
      Rational v = 0;
      for (unsigned i = 0; i <= k; ++i) v += r[i] * (*x)[i];
      if (v < 0) feasible = false;
    }
    if (feasible && (*x)[k] > best) best = (*x)[k];
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace boolmeas::testing
