#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deformkit/groupoid.hpp"

namespace dk {

/// One piece of a fibered product A x_U B: an object P with maps to A and B.
struct PullbackComponent {
  int object = 0;
  int to_left = 0;
  int to_right = 0;
};

/// Finite category with covering families and explicitly supplied pullbacks.
/// A pullback may be a list of components (empty when the overlap is empty).
class Site {
 public:
  struct Arrow {
    std::string id;
    int src = 0;
    int dst = 0;
  };

  int add_object(std::string label);
  int add_arrow(std::string id, int src, int dst);
  void set_identity(int object, int arrow);
  void set_composition(int g, int f, int result);
  void add_cover(int object, std::vector<int> arrows);
  void set_pullback(int f, int g, std::vector<PullbackComponent> components);
  /// Point sets for sites coming from finite spaces (used by function prestacks).
  void set_points(std::vector<std::string> points, std::vector<std::vector<int>> point_sets);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& object_label(int o) const { return objects_.at(static_cast<std::size_t>(o)); }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  int identity(int o) const { return identity_.at(static_cast<std::size_t>(o)); }
  /// g o f; Error(InvalidInput) when undefined.
  int compose(int g, int f) const;
  std::optional<int> try_compose(int g, int f) const;
  std::vector<int> hom(int a, int b) const;
  const std::vector<std::vector<int>>& covers(int o) const { return covers_.at(static_cast<std::size_t>(o)); }
  /// Components of the pullback of f: A -> U and g: B -> U; Error(MissingPullback) if absent.
  const std::vector<PullbackComponent>& pullback(int f, int g) const;
  bool has_pullback(int f, int g) const { return pullbacks_.count({f, g}) > 0; }
  std::optional<int> find_object(const std::string& label) const;
  std::optional<int> find_arrow(const std::string& id) const;
  bool has_points() const noexcept { return !point_sets_.empty(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<int>& point_set(int o) const { return point_sets_.at(static_cast<std::size_t>(o)); }

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;
  std::map<std::pair<int, int>, int> composition_;
  std::vector<std::vector<std::vector<int>>> covers_;
  std::map<std::pair<int, int>, std::vector<PullbackComponent>> pullbacks_;
  std::vector<std::string> points_;
  std::vector<std::vector<int>> point_sets_;
};

/// Identities and composition closure, the identity cover of every object,
/// covers landing in their object, and pullback stability: for every cover
/// {c_i -> U} and arrow g: V -> U the pullbacks (c_i, g) exist, commute, and
/// their projections to V form a covering family of V.
ValidationReport validate_site(const Site& s);

/// Site of a finite topological space: objects are the named opens, arrows the
/// inclusions, covers as listed (the identity cover is always added), and the
/// pullback of two inclusions is the list of maximal objects contained in the
/// intersection.
Site finite_space_site(const std::vector<std::string>& points,
                       const std::vector<std::pair<std::string, std::vector<int>>>& opens,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>& covers);

/// Strict prestack of groupoids: X(U) per object and X(f): X(dst f) -> X(src f).
struct Prestack {
  std::vector<std::shared_ptr<const FiniteGroupoid>> values;
  std::vector<GroupoidFunctor> restrictions;
};

/// Each value is a groupoid, each restriction a functor, identities go to
/// identity functors and X(g o f) = X(f) o X(g) on the nose.
ValidationReport validate_prestack(const Site& s, const Prestack& x);

Prestack constant_prestack(const Site& s, const FiniteGroupoid& value);
/// U -> discrete groupoid of maps points(U) -> {0..n-1}; needs point sets.
Prestack function_prestack(const Site& s, int n);
/// U -> discrete groupoid Hom(U, target).
Prestack representable_prestack(const Site& s, int target);

namespace builtin {
/// Circle from four points: arcs U1 = {q1,q2,p1}, U2 = {q1,q2,p2} whose
/// overlap has the two components V1 = {q1}, V2 = {q2}; S is the whole circle
/// with cover {U1, U2}.
Site circle2();
/// Points 1, 2 with opens {1}, {2}, {1,2}; cover {{1},{2}} of {1,2}.
Site discrete2();
}  // namespace builtin

}  // namespace dk
