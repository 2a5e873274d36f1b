#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deformkit/complex.hpp"
#include "deformkit/error.hpp"

namespace dk {

/// Finite prefactorization data. Each Obs(U) is a cochain complex whose basis
/// is flattened in ascending degree order. A structure map for the ordered
/// family (U_1, ..., U_n) into V is one matrix from the tensor product
/// Obs(U_1) (x) ... (x) Obs(U_n) (basis: tuples of flat indices,
/// lexicographic, first factor most significant) to Obs(V).
struct PrefactData {
  std::vector<std::string> opens;
  std::vector<std::vector<bool>> disjoint;   // symmetric
  std::vector<std::vector<bool>> contained;  // contained[u][v]: u inside v
  std::vector<CochainComplex> obs;
  std::map<std::pair<std::vector<int>, int>, Matrix> maps;
};

/// Shapes, relation consistency (symmetric disjointness, no open disjoint from
/// itself, u inside v and v disjoint from w implies u disjoint from w),
/// families pairwise disjoint and inside their target, degree-preserving
/// cochain maps for the Koszul-signed tensor differential.
ValidationReport validate_prefact(const PrefactData& d);

/// (i) invariance: for each pair of stored orderings of the same family into
/// the same target, the maps agree after the Koszul-signed factor swap;
/// (ii) associativity: for each stored family F into W and each stored
/// family G = (V_1..V_m) into W with every member of F inside exactly one
/// V_j, the direct map equals the composite through the V_j (with identity
/// for V_j holding only itself). Violations of kind "invariance" carry the
/// two orderings; "associativity" carries F and G.
ValidationReport prefact_check(const PrefactData& d);

struct ObsPatch {
  std::string name;
  int dim = 0;
};

struct ObsOpen {
  std::string name;
  std::vector<std::string> patches;
};

/// Patches of a disjoint-union poset with the degree-1 dimension of g on each
/// patch; every patch is an open on its own, listed opens are unions.
struct ObsModel {
  std::vector<ObsPatch> patches;
  std::vector<ObsOpen> unions;
  int degree_bound = 1;
};

/// Obs(U) = polynomials of degree <= D on g(U)^1 = (+) patches (degree 0,
/// zero differential); maps = truncated products of pulled-back polynomials,
/// generated for every ordering of every disjoint family inside each open.
/// Throws Error(NotDisjointPoset) for unknown or repeated patches, empty opens
/// or duplicate opens.
PrefactData obs_assignment(const ObsModel& model);

/// Monomial labels of Obs for the given variable names, in basis order.
std::vector<std::string> obs_monomial_labels(const std::vector<std::string>& variables, int degree_bound);

}  // namespace dk
