#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deformkit/error.hpp"

namespace dk {

/// Finite groupoid with materialised objects and morphisms. Composition is
/// either tabulated or supplied as a function (for large derived groupoids).
class FiniteGroupoid {
 public:
  struct Morphism {
    int src = 0;
    int dst = 0;
    std::string label;
  };
  /// compose(g, f) = g o f for f: a -> b, g: b -> c.
  using Composer = std::function<int(int, int)>;

  FiniteGroupoid() = default;

  int add_object(std::string label);
  int add_morphism(int src, int dst, std::string label);
  void set_identity(int object, int morphism);
  void set_inverse(int morphism, int inverse);
  void set_composition(int g, int f, int result);
  void set_composer(Composer c) { composer_ = std::move(c); }
  /// Builds the hom index; call after all morphisms have been added.
  void finalize();

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const std::string& object_label(int o) const { return objects_.at(static_cast<std::size_t>(o)); }
  const Morphism& morphism(int m) const { return morphisms_.at(static_cast<std::size_t>(m)); }
  int identity(int o) const { return identity_.at(static_cast<std::size_t>(o)); }
  int inverse(int m) const { return inverse_.at(static_cast<std::size_t>(m)); }
  /// Throws Error(InvalidInput) if the morphisms are not composable or the
  /// composite is unknown.
  int compose(int g, int f) const;
  const std::vector<int>& hom(int a, int b) const;
  std::optional<int> find_object(const std::string& label) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
  std::map<std::pair<int, int>, int> table_;
  Composer composer_;
  std::vector<std::vector<int>> hom_;
  std::map<std::string, int> object_index_;
};

/// Identity and inverse laws, closure and associativity of composition,
/// source/target bookkeeping.
ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// One-object groupoid of a group given by its multiplication table.
FiniteGroupoid delooping(const std::vector<std::string>& element_labels,
                         const std::vector<std::vector<int>>& table, int identity);
/// Only identity morphisms.
FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects);

struct GroupoidFunctor {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

GroupoidFunctor identity_functor(const FiniteGroupoid& g);
/// (g o f)(x) = g(f(x)).
GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f);
bool same_functor(const GroupoidFunctor& a, const GroupoidFunctor& b);
ValidationReport validate_functor(const GroupoidFunctor& f, const FiniteGroupoid& source,
                                  const FiniteGroupoid& target);

struct Pi0 {
  std::size_t count = 0;
  /// Least object label of each component, sorted.
  std::vector<std::string> representatives;
  /// Component index of each object (components numbered in representative order).
  std::vector<int> component_of;
};

Pi0 pi0(const FiniteGroupoid& g);

struct WeakEquivalenceVerdict {
  bool fully_faithful = true;
  bool essentially_surjective = true;
  /// Failing object pair (source labels) for full faithfulness.
  std::optional<std::pair<std::string, std::string>> hom_witness;
  /// Target object outside the essential image.
  std::optional<std::string> unreachable_object;
  bool ok() const noexcept { return fully_faithful && essentially_surjective; }
};

WeakEquivalenceVerdict is_weak_equivalence(const GroupoidFunctor& f, const FiniteGroupoid& source,
                                           const FiniteGroupoid& target);

/// Product of finite groupoids, not materialised: objects and morphisms are
/// tuples of factor indices.
struct ProductGroupoid {
  std::vector<std::shared_ptr<const FiniteGroupoid>> factors;
  std::vector<std::string> factor_names;

  std::size_t size() const noexcept { return factors.size(); }
  const FiniteGroupoid& factor(std::size_t k) const { return *factors[k]; }
  std::vector<int> identity(const std::vector<int>& object) const;
  std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& f) const;
  std::vector<int> source(const std::vector<int>& m) const;
  std::vector<int> target(const std::vector<int>& m) const;
  /// All object tuples, lexicographic. Empty when some factor has no objects.
  std::vector<std::vector<int>> objects() const;
  /// All morphism tuples from a to b, lexicographic.
  std::vector<std::vector<int>> hom(const std::vector<int>& a, const std::vector<int>& b) const;
  std::string object_label(const std::vector<int>& o) const;
  std::string morphism_label(const std::vector<int>& m) const;
  /// Explicit groupoid; only sensible for small products.
  FiniteGroupoid materialize() const;
};

/// Functor between products whose k-th output factor is functors[k] applied
/// to input factor sources[k].
struct ComponentwiseFunctor {
  std::vector<int> sources;
  std::vector<GroupoidFunctor> functors;

  std::vector<int> object(const std::vector<int>& o) const;
  std::vector<int> morphism(const std::vector<int>& m) const;
};

ComponentwiseFunctor identity_functor(const ProductGroupoid& p);
ComponentwiseFunctor compose(const ComponentwiseFunctor& g, const ComponentwiseFunctor& f);
/// Exact equality as functors on the whole source product.
bool same_functor(const ComponentwiseFunctor& a, const ComponentwiseFunctor& b,
                  const ProductGroupoid& source);

}  // namespace dk
