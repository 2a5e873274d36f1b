#pragma once

#include <string>
#include <vector>

#include "deformkit/error.hpp"

namespace dk {

/// Finite group by multiplication table: table[a][b] = a*b.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates the table (ValidationFailure) and derives identity and inverses.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);

  int order() const noexcept { return static_cast<int>(labels_.size()); }
  const std::string& label(int g) const { return labels_.at(static_cast<std::size_t>(g)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int identity() const noexcept { return identity_; }
  int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  /// a b a^-1 b^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inverse(a), inverse(b))); }
  int conjugate(int k, int g) const { return mul(mul(k, g), inverse(k)); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Closure under multiplication, associativity, two-sided identity, inverses.
ValidationReport validate_group_table(const std::vector<std::vector<int>>& table);

/// Group generated by permutations of {0..degree-1} (images listed 0-based).
/// Elements are sorted lexicographically by image tuple, so the identity comes
/// first; labels use 1-based cycle notation ("e", "(12)", "(123)(45)").
/// Product convention: (s*t)(x) = s(t(x)).
FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators, int degree);

/// Subgroup generated by the given elements, sorted ascending.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);

/// Number of conjugacy classes, by orbit enumeration.
int conjugacy_class_count(const FiniteGroup& g);

namespace builtin {
/// Z<n>, S<n> (n <= 6), D<n> (order 2n, n >= 3), Q8. Throws
/// Error(UnknownBuiltin) otherwise.
FiniteGroup group(const std::string& name);
}  // namespace builtin

}  // namespace dk
