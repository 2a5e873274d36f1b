#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "deformkit/groupoid.hpp"
#include "deformkit/site.hpp"

namespace dk {

/// Cosimplicial groupoid truncated at level 2:
///   X0 =d0,d1=> X1 =d0,d1,d2=> X2,   s0: X1 -> X0.
struct CosimplicialGroupoid {
  ProductGroupoid level0, level1, level2;
  ComponentwiseFunctor d0_1, d1_1;
  ComponentwiseFunctor d0_2, d1_2, d2_2;
  ComponentwiseFunctor s0_0;
};

/// d_j d_i = d_i d_{j-1} (i < j) from X0 to X2 and s0 d0 = id = s0 d1 on X0.
ValidationReport validate_cosimplicial(const CosimplicialGroupoid& d);

/// All levels equal to `value`, all functors identities.
CosimplicialGroupoid constant_diagram(const FiniteGroupoid& value);

/// Groupoid of descent data: objects (x, h) with x in X0, h: d1 x -> d0 x in
/// X1, s0(h) = id_x and d0(h) o d2(h) = d1(h); morphisms (x,h) -> (x',h') are
/// f: x -> x' with h' o d1(f) = d0(f) o h.
struct Holim {
  FiniteGroupoid groupoid;
  std::vector<std::vector<int>> x;  // per object
  std::vector<std::vector<int>> h;  // per object
  std::vector<std::vector<int>> f;  // per morphism, tuple in X0
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> object_index;
  std::map<std::pair<int, std::vector<int>>, int> morphism_index;  // (source object, f)
};

/// Throws Error(InvalidDiagram) if validate_cosimplicial fails.
Holim holim2(const CosimplicialGroupoid& d);

/// One factor of a Cech level: the overlap piece and its maps to the cover members.
struct CechPiece {
  std::vector<int> members;  // indices into the cover
  int object = 0;            // site object of the piece
  std::vector<int> to_member;  // site arrows piece -> U_{members[k]}
};

struct CechDiagram {
  CosimplicialGroupoid diagram;
  std::vector<CechPiece> level0, level1, level2;
};

/// Levels over all ordered pairs and triples of cover members, each overlap
/// split into the components recorded by the site. Throws
/// Error(MissingPullback) for absent pullbacks and Error(InvalidDiagram)
/// if a face map cannot be factored through the recorded pullbacks.
CechDiagram cech_diagram(const Site& site, int object, const std::vector<int>& cover, const Prestack& x);

/// Psi: X(U) -> holim, u -> (restrictions of u, identity transition data).
GroupoidFunctor comparison_functor(const std::vector<int>& cover, const Prestack& x, int object,
                                   const CechDiagram& cech, const Holim& holim);

struct CoverVerdict {
  std::string object;
  std::vector<std::string> cover;
  std::size_t value_pi0 = 0;
  std::size_t holim_objects = 0;
  std::size_t holim_pi0 = 0;
  WeakEquivalenceVerdict verdict;
};

struct DescentReport {
  std::vector<CoverVerdict> covers;  // ordered by object label, then cover order
  bool ok() const noexcept {
    for (const auto& c : covers)
      if (!c.verdict.ok()) return false;
    return true;
  }
};

/// Checks every covering family of every object. Site and prestack are
/// validated first (ValidationFailure).
DescentReport descent_check(const Site& site, const Prestack& x, unsigned threads = 0);

}  // namespace dk
