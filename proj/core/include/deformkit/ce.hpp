#pragma once

#include <map>
#include <optional>
#include <vector>

#include "deformkit/complex.hpp"
#include "deformkit/lie.hpp"

namespace dk {

enum class CeDirection { Homology, Cohomology };

struct CeSpec {
  LieAlgebra lie;
  LieModule module;
  CeDirection direction = CeDirection::Cohomology;
  /// Defaults to dim(lie).
  std::optional<int> max_degree;
};

/// Increasing index tuples of length k drawn from {0..n-1}, lexicographic.
std::vector<std::vector<int>> wedge_basis(int n, int k);

/// Hom(Lambda^n g, M) for 0 <= n <= max_degree. Basis of degree n: pairs
/// (J, m) with J an increasing n-tuple, index = rank(J) * dim M + m. The
/// coboundary is
///   (delta f)(x_0..x_n) = sum_p (-1)^p x_p . f(..^x_p..)
///                       + sum_{p<q} (-1)^{p+q} f([x_p,x_q], ..^x_p..^x_q..).
/// Inputs are validated first (ValidationFailure), and delta^2 = 0 is verified.
CochainComplex ce_cochain_complex(const CeSpec& spec);

/// M (x) Lambda^n g placed in cohomological degree -n, with
///   d(u (x) x_1..x_k) = sum_i (-1)^{i+1} u.x_i (x) ..^x_i..
///                     + sum_{i<j} (-1)^{i+j} u (x) [x_i,x_j] ..^x_i..^x_j..
/// and the right action u.x = -rho(x) u.
CochainComplex ce_chain_complex(const CeSpec& spec);

/// Degree n -> dim H^n(g, M).
std::map<int, std::size_t> lie_cohomology(const CeSpec& spec);
/// Degree n >= 0 -> dim H_n(g, M).
std::map<int, std::size_t> lie_homology(const CeSpec& spec);

/// Unchecked builders (no validation, no closure check) used to exhibit
/// delta^2 != 0 on invalid input.
CochainComplex ce_cochain_complex_unchecked(const CeSpec& spec);
CochainComplex ce_chain_complex_unchecked(const CeSpec& spec);

}  // namespace dk
