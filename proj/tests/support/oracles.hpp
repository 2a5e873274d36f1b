#pragma once

// Independent reference computations and seeded generators for the tests.
// Nothing here calls the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "deformkit/group.hpp"
#include "deformkit/matrix.hpp"

namespace oracle {

using dk::Matrix;
using dk::Rational;

/// Rank by fraction-free (Bareiss) elimination on the integer matrix obtained
/// by clearing denominators row by row.
inline std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < C; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t p = rank;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < R; ++r) {
      for (std::size_t k = c + 1; k < C; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Conjugacy classes by explicit class sets.
inline int class_count(const dk::FiniteGroup& g) {
  std::set<std::set<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> cls;
    for (int k = 0; k < g.order(); ++k) cls.insert(g.mul(g.mul(k, x), g.inverse(k)));
    classes.insert(cls);
  }
  return static_cast<int>(classes.size());
}

inline std::uint64_t commuting_pairs(const dk::FiniteGroup& g) {
  std::uint64_t n = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++n;
  return n;
}

/// Burnside count of simultaneous-conjugation orbits on commuting pairs:
/// (1/|G|) sum_k #{(a,b) commuting, fixed by k}.
inline std::uint64_t burnside_pair_orbits(const dk::FiniteGroup& g) {
  std::uint64_t fixed = 0;
  for (int k = 0; k < g.order(); ++k)
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (g.mul(a, b) == g.mul(b, a) && g.mul(k, a) == g.mul(a, k) && g.mul(k, b) == g.mul(b, k)) ++fixed;
  return fixed / static_cast<std::uint64_t>(g.order());
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Seeded source of small exact values.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  /// p/q with |p| <= 3, 1 <= q <= 3; zero with probability `zero_p`.
  Rational small_rational(double zero_p = 0.3) {
    if (coin(zero_p)) return 0;
    Rational r(uniform(-3, 3), uniform(1, 3));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational() {
    Rational r = 0;
    while (r == 0) r = small_rational(0.0);
    return r;
  }
  Matrix matrix(std::size_t r, std::size_t c, double zero_p = 0.4) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(zero_p);
    return m;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
