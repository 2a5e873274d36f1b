#pragma once

#include "deformkit/dgla.hpp"
#include "deformkit/lie.hpp"

namespace dk {

/// A dgla A (x) l together with an invariant pairing on l and integration on
/// the top degree of A. Elements are dgla vectors with scalar coefficients.
struct CyclicStructure {
  Dgla dgla;
  InvariantPairing pairing;
};

/// Checks the integration functional exists (NoIntegration) and the algebra's
/// top degree is 3 (WrongTopDegree).
void require_cs_model(const CyclicStructure& c);

/// int <a (x) X, b (x) Y> = int(ab) <X, Y>, extended bilinearly.
Rational integrated_pairing(const CyclicStructure& c, const SparseVector& u, const SparseVector& v);

/// int <alpha, d alpha> + 1/3 int <alpha, [alpha, alpha]>.
Rational cs_value(const CyclicStructure& c, const SparseVector& alpha);

/// Partial derivatives of cs_value along each degree-1 basis element, in the
/// order of Dgla::basis_in_degree(1).
Vector cs_gradient(const CyclicStructure& c, const SparseVector& alpha);

}  // namespace dk
