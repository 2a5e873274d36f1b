#pragma once

#include <string>
#include <vector>

#include "deformkit/error.hpp"

namespace dk {

/// Non-decreasing map [source] -> [target], values[j] = image of j.
struct OrdinalMap {
  int source = 0;
  int target = 0;
  std::vector<int> values;

  friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;
};

/// Throws Error(InvalidInput) unless values has source+1 entries, is
/// non-decreasing and lies in [0, target].
void validate_ordinal_map(const OrdinalMap& f);

OrdinalMap identity_map(int n);

/// Standard: d_i^n(j) = j if j < i, j+1 otherwise (the image misses i).
/// Literal: d_i^n(j) = j if j <= i, j+1 otherwise (misses i+1, and
/// d_{n-1}^n = d_n^n); kept to exhibit how the relations break under it.
enum class CofaceConvention { Standard, Literal };

/// d_i^n : [n-1] -> [n], n >= 1, 0 <= i <= n.
OrdinalMap coface(int n, int i, CofaceConvention conv = CofaceConvention::Standard);
/// s_i^n : [n+1] -> [n], n >= 0, 0 <= i <= n; s_i^n(j) = j if j <= i, j-1 otherwise.
OrdinalMap codegeneracy(int n, int i);
/// f o g; throws Error(ComposeMismatch) unless g.target == f.source.
OrdinalMap compose(const OrdinalMap& f, const OrdinalMap& g);

struct IdentityFailure {
  int family = 0;
  int n = 0;
  int i = 0;
  int j = 0;
};

struct SimplicialReport {
  std::string header;
  int max_n = 0;
  std::vector<std::size_t> checked_per_family;  // five entries
  std::size_t total_checked = 0;
  std::vector<IdentityFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Exhaustively checks, for every n <= max_n:
///  (1) d_j^{n+1} d_i^n = d_i^{n+1} d_{j-1}^n          n >= 1, 0 <= i < j <= n+1
///  (2) s_j^{n-1} d_i^n = d_i^{n-1} s_{j-1}^{n-2}       n >= 2, 0 <= i < j <= n-1
///  (3) s_j^{n-1} d_j^n = id = s_j^{n-1} d_{j+1}^n      n >= 1, 0 <= j <= n-1
///  (4) s_j^{n-1} d_i^n = d_{i-1}^{n-1} s_j^{n-2}       n >= 2, 0 <= j, j+1 < i <= n
///  (5) s_j^{n-1} s_i^n = s_i^{n-1} s_{j+1}^n           n >= 1, 0 <= i <= j <= n-1
SimplicialReport verify_simplicial_identities(int max_n,
                                              CofaceConvention conv = CofaceConvention::Standard);

struct Generator {
  enum class Kind { Coface, Codegeneracy };
  Kind kind = Kind::Coface;
  int n = 0;
  int i = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

OrdinalMap generator_map(const Generator& g);
std::string to_string(const Generator& g);

/// Both lists are in application order: first every codegeneracy (indices
/// decreasing), then every coface (indices increasing).
struct EpiMono {
  std::vector<Generator> codegeneracies;
  std::vector<Generator> cofaces;
};

EpiMono epi_mono_factor(const OrdinalMap& f);
/// Composite of the factorization, applied in order, starting from identity_map(source).
OrdinalMap evaluate(const EpiMono& factors, int source);

/// All non-decreasing maps [n] -> [m].
std::vector<OrdinalMap> all_ordinal_maps(int n, int m);

}  // namespace dk
