#include "deformkit/holonomy.hpp"

#include <algorithm>
#include <map>

#include "deformkit/parallel.hpp"

namespace dk {

bool satisfies_surface_relation(const FiniteGroup& g, const SurfaceRep& rep) {
  if (rep.genus < 0 || rep.elements.size() != static_cast<std::size_t>(2 * rep.genus)) return false;
  int acc = g.identity();
  for (int i = 0; i < rep.genus; ++i)
    acc = g.mul(acc, g.commutator(rep.elements[static_cast<std::size_t>(2 * i)],
                                  rep.elements[static_cast<std::size_t>(2 * i + 1)]));
  return acc == g.identity();
}

namespace {

void check_budget(int genus, const FiniteGroup& g, std::uint64_t budget) {
  if (genus < 1) throw Error(ErrorCode::InvalidInput, "genus must be >= 1");
  std::uint64_t total = 1;
  for (int i = 0; i < 2 * genus; ++i) {
    if (total > budget / static_cast<std::uint64_t>(g.order()) + 1) {
      total = budget + 1;
      break;
    }
    total *= static_cast<std::uint64_t>(g.order());
  }
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded, "|G|^(2g) exceeds the enumeration budget " + std::to_string(budget));
}

// Enumerates all tuples with the given first coordinate, tracking the running
// product of completed commutators.
void enumerate_shard(const FiniteGroup& g, int genus, int first, bool keep, std::uint64_t& count,
                     std::vector<std::vector<int>>& out) {
  const std::size_t len = static_cast<std::size_t>(2 * genus);
  const int n = g.order();
  std::vector<int> t(len, 0);
  t[0] = first;
  // odometer over positions 1..len-1
  while (true) {
    int acc = g.identity();
    for (int i = 0; i < genus; ++i)
      acc = g.mul(acc, g.commutator(t[static_cast<std::size_t>(2 * i)], t[static_cast<std::size_t>(2 * i + 1)]));
    if (acc == g.identity()) {
      ++count;
      if (keep) out.push_back(t);
    }
    std::size_t k = len;
    while (k > 1) {
      --k;
      if (++t[k] < n) break;
      t[k] = 0;
      if (k == 1) return;
    }
  }
}

}  // namespace

RepEnumeration enumerate_reps(int genus, const FiniteGroup& g, std::uint64_t budget, bool keep_list,
                              unsigned threads) {
  check_budget(genus, g, budget);
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::vector<std::vector<int>>> lists(n);
  parallel_for(
      n, [&](std::size_t a) { enumerate_shard(g, genus, static_cast<int>(a), keep_list, counts[a], lists[a]); },
      threads);
  RepEnumeration out;
  for (std::size_t a = 0; a < n; ++a) {
    out.count += counts[a];
    if (keep_list) out.reps.insert(out.reps.end(), lists[a].begin(), lists[a].end());
  }
  return out;
}

RepOrbits conj_classes_of_reps(int genus, const FiniteGroup& g, std::uint64_t budget, unsigned threads) {
  auto all = enumerate_reps(genus, g, budget, true, threads);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < all.reps.size(); ++i) index[all.reps[i]] = i;
  std::vector<bool> seen(all.reps.size(), false);
  RepOrbits out;
  out.total = all.count;
  for (std::size_t i = 0; i < all.reps.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t size = 0;
    for (int k = 0; k < g.order(); ++k) {
      auto t = all.reps[i];
      for (int& e : t) e = g.conjugate(k, e);
      std::size_t j = index.at(t);
      if (!seen[j]) {
        seen[j] = true;
        ++size;
      }
    }
    out.representatives.push_back(all.reps[i]);
    out.orbit_sizes.push_back(size);
  }
  return out;
}

TransportBundle rep_to_bundle(const SurfaceRep& rep, const FiniteGroup& g) {
  for (int e : rep.elements)
    if (e < 0 || e >= g.order()) throw Error(ErrorCode::InvalidInput, "rep element out of range");
  if (!satisfies_surface_relation(g, rep))
    throw Error(ErrorCode::InvalidInput, "tuple does not satisfy the surface relation");
  TransportBundle out;
  out.image = generated_subgroup(g, rep.elements);
  const int n = g.order();
  for (int x = 0; x < n; ++x) out.groupoid.add_object(g.label(x));
  // morphism index of (h, x) = position of h in image * n + x
  std::map<int, int> slot;
  for (std::size_t i = 0; i < out.image.size(); ++i) slot[out.image[i]] = static_cast<int>(i);
  for (int h : out.image)
    for (int x = 0; x < n; ++x) out.groupoid.add_morphism(x, g.mul(h, x), g.label(h) + "|" + g.label(x));
  auto idx = [&](int h, int x) { return slot.at(h) * n + x; };
  for (int x = 0; x < n; ++x) out.groupoid.set_identity(x, idx(g.identity(), x));
  for (int h : out.image)
    for (int x = 0; x < n; ++x) {
      out.groupoid.set_inverse(idx(h, x), idx(g.inverse(h), g.mul(h, x)));
      for (int h2 : out.image) out.groupoid.set_composition(idx(h2, g.mul(h, x)), idx(h, x), idx(g.mul(h2, h), x));
    }
  out.groupoid.finalize();
  out.components = static_cast<std::size_t>(n) / out.image.size();
  return out;
}

SurfaceRep conjugate_rep(const SurfaceRep& rep, const FiniteGroup& g, int k) {
  SurfaceRep out = rep;
  for (int& e : out.elements) e = g.conjugate(k, e);
  return out;
}

GroupoidFunctor conjugation_functor(const FiniteGroup& g, int k, const TransportBundle& from,
                                    const TransportBundle& to) {
  const int n = g.order();
  std::map<int, int> slot;
  for (std::size_t i = 0; i < to.image.size(); ++i) slot[to.image[i]] = static_cast<int>(i);
  GroupoidFunctor f;
  for (int x = 0; x < n; ++x) f.object_map.push_back(g.mul(k, x));
  for (int h : from.image)
    for (int x = 0; x < n; ++x) {
      auto it = slot.find(g.conjugate(k, h));
      if (it == slot.end()) throw Error(ErrorCode::InvalidInput, "target bundle is not the conjugate");
      f.morphism_map.push_back(it->second * n + g.mul(k, x));
    }
  return f;
}

}  // namespace dk
