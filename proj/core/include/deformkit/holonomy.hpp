#pragma once

#include <cstdint>
#include <vector>

#include "deformkit/group.hpp"
#include "deformkit/groupoid.hpp"

namespace dk {

/// (A_1, B_1, ..., A_g, B_g) as group element indices.
struct SurfaceRep {
  int genus = 0;
  std::vector<int> elements;
};

/// prod_i [A_i, B_i] == e.
bool satisfies_surface_relation(const FiniteGroup& g, const SurfaceRep& rep);

struct RepEnumeration {
  std::uint64_t count = 0;
  /// Filled when requested; lexicographic in the element indices.
  std::vector<std::vector<int>> reps;
};

/// Counts 2g-tuples satisfying the surface relation. Throws
/// Error(BudgetExceeded) if |G|^(2g) > budget, Error(InvalidInput) for genus < 1.
/// Work is sharded by the first coordinate.
RepEnumeration enumerate_reps(int genus, const FiniteGroup& g, std::uint64_t budget, bool keep_list,
                              unsigned threads = 0);

struct RepOrbits {
  std::uint64_t total = 0;
  /// Lexicographically least tuple of each orbit, in lexicographic order.
  std::vector<std::vector<int>> representatives;
  std::vector<std::uint64_t> orbit_sizes;
};

/// Orbits of simultaneous conjugation on the solutions.
RepOrbits conj_classes_of_reps(int genus, const FiniteGroup& g, std::uint64_t budget, unsigned threads = 0);

/// Transport groupoid of a representation: objects are the group elements,
/// morphisms (h, x): x -> h x for h in the image of rho. Components are the
/// right cosets Im(rho) \ G.
struct TransportBundle {
  FiniteGroupoid groupoid;
  std::vector<int> image;  // sorted subgroup generated by the rep
  std::size_t components = 0;
};

/// Throws Error(InvalidInput) if the rep violates the surface relation.
TransportBundle rep_to_bundle(const SurfaceRep& rep, const FiniteGroup& g);

/// k rho k^-1, elementwise.
SurfaceRep conjugate_rep(const SurfaceRep& rep, const FiniteGroup& g, int k);

/// Isomorphism of transport groupoids bundle(rho) -> bundle(k rho k^-1),
/// x -> k x, (h, x) -> (k h k^-1, k x).
GroupoidFunctor conjugation_functor(const FiniteGroup& g, int k, const TransportBundle& from,
                                    const TransportBundle& to);

}  // namespace dk
