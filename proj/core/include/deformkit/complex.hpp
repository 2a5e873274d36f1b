#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "deformkit/matrix.hpp"

namespace dk {

/// Finitely many nonzero components, each an ordered list of unique basis labels.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;

  void set_component(int degree, std::vector<std::string> labels);
  std::size_t dim(int degree) const;
  const std::vector<std::string>& labels(int degree) const;
  /// Degrees with a (possibly empty) declared component, ascending.
  std::vector<int> degrees() const;
  std::size_t total_dim() const;

 private:
  std::map<int, std::vector<std::string>> components_;
};

/// Cochain complex: d^n maps degree n to degree n+1. A missing differential is
/// the zero map.
class CochainComplex {
 public:
  CochainComplex() = default;
  explicit CochainComplex(GradedVectorSpace spaces) : spaces_(std::move(spaces)) {}

  /// Matrix shape must be dim(n+1) x dim(n).
  void set_differential(int degree, Matrix d);

  const GradedVectorSpace& spaces() const noexcept { return spaces_; }
  /// The differential out of `degree`, materialising the zero map if unset.
  Matrix differential(int degree) const;
  bool has_differential(int degree) const { return differentials_.count(degree) > 0; }

 private:
  GradedVectorSpace spaces_;
  std::map<int, Matrix> differentials_;
};

/// Throws Error(ComplexNotClosed) naming the first degree n with d^{n+1} d^n != 0.
void verify_closed(const CochainComplex& c);

/// dim H^n = dim ker d^n - rank d^{n-1}, for every declared degree.
std::map<int, std::size_t> cohomology_dims(const CochainComplex& c);

}  // namespace dk
