#include "deformkit/complex.hpp"

#include <set>

#include "deformkit/error.hpp"

namespace dk {

void GradedVectorSpace::set_component(int degree, std::vector<std::string> labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw Error(ErrorCode::InvalidInput,
                  "duplicate basis label '" + l + "' in degree " + std::to_string(degree));
  components_[degree] = std::move(labels);
}

std::size_t GradedVectorSpace::dim(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& GradedVectorSpace::labels(int degree) const {
  static const std::vector<std::string> empty;
  auto it = components_.find(degree);
  return it == components_.end() ? empty : it->second;
}

std::vector<int> GradedVectorSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [d, _] : components_) out.push_back(d);
  return out;
}

std::size_t GradedVectorSpace::total_dim() const {
  std::size_t n = 0;
  for (const auto& [_, l] : components_) n += l.size();
  return n;
}

void CochainComplex::set_differential(int degree, Matrix d) {
  if (d.rows() != spaces_.dim(degree + 1) || d.cols() != spaces_.dim(degree))
    throw Error(ErrorCode::InvalidInput,
                "differential out of degree " + std::to_string(degree) + " has shape " +
                    std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                    std::to_string(spaces_.dim(degree + 1)) + "x" +
                    std::to_string(spaces_.dim(degree)));
  differentials_[degree] = std::move(d);
}

Matrix CochainComplex::differential(int degree) const {
  auto it = differentials_.find(degree);
  if (it != differentials_.end()) return it->second;
  return Matrix(spaces_.dim(degree + 1), spaces_.dim(degree));
}

void verify_closed(const CochainComplex& c) {
  std::set<int> degrees;
  for (int n : c.spaces().degrees()) {
    degrees.insert(n);
    degrees.insert(n - 1);
  }
  for (int n : degrees) {
    if (!c.has_differential(n) || !c.has_differential(n + 1)) continue;
    if (!(c.differential(n + 1) * c.differential(n)).is_zero())
      throw Error(ErrorCode::ComplexNotClosed,
                  "d^" + std::to_string(n + 1) + " o d^" + std::to_string(n) +
                      " is nonzero (degree " + std::to_string(n) + ")");
  }
}

std::map<int, std::size_t> cohomology_dims(const CochainComplex& c) {
  verify_closed(c);
  std::map<int, std::size_t> out;
  for (int n : c.spaces().degrees()) {
    std::size_t dim = c.spaces().dim(n);
    std::size_t rank_out = c.has_differential(n) ? rank(c.differential(n)) : 0;
    std::size_t rank_in = c.has_differential(n - 1) ? rank(c.differential(n - 1)) : 0;
    out[n] = dim - rank_out - rank_in;
  }
  return out;
}

}  // namespace dk
