#ifndef OCLATTICE_GSETS_HPP
#define OCLATTICE_GSETS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "equivalence.hpp"
#include "error.hpp"
#include "lattices.hpp"
#include "perm.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "words.hpp"

namespace oclattice
{

/// Finite G-set. The action is stored through the point maps of a
/// generating set of G; the full group is only needed through its order.
/// A relation is action-stable iff it is stable under every generator,
/// since in a finite group every inverse is a positive power.
class GSet
{
public:
  using PointMap = std::vector<std::uint32_t>;

  GSet(std::size_t size, std::uint64_t group_order, std::vector<PointMap> generators,
       std::vector<std::string> labels = {})
  : _size(size), _group_order(group_order), _generators(std::move(generators)), _labels(std::move(labels))
  {
    if (_size == 0)
      throw Error(ErrorCode::InvariantViolation, "a G-set needs at least one point");
    if (!_labels.empty() && _labels.size() != _size)
      throw Error(ErrorCode::InvariantViolation, "label count does not match G-set size");
    for (auto const &g : _generators) {
      if (g.size() != _size)
        throw Error(ErrorCode::InvariantViolation, "generator map has the wrong size");
      std::vector<bool> hit(_size, false);
      for (auto x : g) {
        if (x >= _size || hit[x])
          throw Error(ErrorCode::InvariantViolation, "generator does not act as a bijection");
        hit[x] = true;
      }
    }
  }

  /// The trivial group acting on n points.
  static GSet trivial(std::size_t n)
  { return GSet(n, 1, {}); }

  /// G acting on {0..m-1} by its permutations.
  static GSet natural(PermGroup const &g)
  {
    std::vector<PointMap> gens;
    for (auto const &s : g.generators())
      gens.push_back(s.images());
    return GSet(g.degree(), g.order(), std::move(gens));
  }

  /// G acting on itself by left multiplication.
  static GSet regular(PermGroup const &g)
  {
    std::vector<PointMap> gens;
    for (auto const &s : g.generators()) {
      PointMap map(g.order());
      for (std::size_t h = 0; h < g.order(); ++h)
        map[h] = static_cast<std::uint32_t>(g.index_of(s * g.elements()[h]));
      gens.push_back(std::move(map));
    }
    std::vector<std::string> labels;
    for (auto const &h : g.elements())
      labels.push_back(to_string(h));
    return GSet(g.order(), g.order(), std::move(gens), std::move(labels));
  }

  std::size_t size() const noexcept { return _size; }
  std::uint64_t group_order() const noexcept { return _group_order; }
  std::vector<PointMap> const &generators() const noexcept { return _generators; }
  std::vector<std::string> const &labels() const noexcept { return _labels; }

  /// Distinct point maps of the acting group (the image of G in Sym(A)),
  /// closed from the generators; identity first.
  std::vector<PointMap> action_maps() const
  {
    PointMap id(_size);
    for (std::uint32_t i = 0; i < _size; ++i)
      id[i] = i;
    std::set<PointMap> seen{id};
    std::vector<PointMap> out{id};
    for (std::size_t next = 0; next < out.size(); ++next) {
      for (auto const &g : _generators) {
        PointMap composed(_size);
        for (std::size_t i = 0; i < _size; ++i)
          composed[i] = g[out[next][i]];
        if (seen.insert(composed).second)
          out.push_back(std::move(composed));
      }
    }
    return out;
  }

  bool is_stable(FiniteEquivalence const &eq) const
  {
    for (auto const &g : _generators) {
      std::vector<std::uint32_t> image_class(eq.class_count(), UINT32_MAX);
      for (std::size_t i = 0; i < _size; ++i) {
        auto &slot = image_class[eq.class_of(i)];
        auto target = eq.class_of(g[i]);
        if (slot == UINT32_MAX)
          slot = target;
        else if (slot != target)
          return false;
      }
    }
    return true;
  }

private:
  std::size_t _size;
  std::uint64_t _group_order;
  std::vector<PointMap> _generators;
  std::vector<std::string> _labels;
};

/// W_λ / φ_λ(V) as a G_λ-set. Points are the φ-classes in order of their
/// smallest member and are labelled by that member.
inline GSet quotient_gset(Presentation const &sigma, Partition const &p, Caps const &caps = {})
{
  auto group = g_lambda(p);
  auto phi = phi_lambda(sigma, p.canonical_content(), caps);
  auto const &words = phi.words;
  auto const &eq = phi.classes;

  auto classes = eq.classes();
  std::vector<std::string> labels;
  labels.reserve(classes.size());
  for (auto const &members : classes)
    labels.push_back(to_string(words[members.front()]));

  std::vector<GSet::PointMap> maps;
  for (auto const &g : group.generators()) {
    GSet::PointMap map(classes.size(), UINT32_MAX);
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto image = words.index_of(act_on_word(g, words[i]));
      if (!image)
        throw Error(ErrorCode::InvariantViolation, "renaming left the word class");
      auto &slot = map[eq.class_of(i)];
      auto target = eq.class_of(*image);
      if (slot == UINT32_MAX)
        slot = target;
      else if (slot != target)
        throw Error(ErrorCode::InvariantViolation,
                    "phi is not stable under " + to_string(g) + " at " + to_string(words[i]));
    }
    maps.push_back(std::move(map));
  }

  return GSet(classes.size(), group.order(), std::move(maps), std::move(labels));
}

/// Smallest action-stable equivalence containing (i, j).
inline FiniteEquivalence principal_congruence(GSet const &a, std::size_t i, std::size_t j)
{
  if (i >= a.size() || j >= a.size())
    throw Error(ErrorCode::InvariantViolation, "point out of range");
  UnionFind uf(a.size());
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending;
  if (uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)))
    pending.emplace_back(i, j);
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    for (auto const &g : a.generators())
      if (uf.unite(g[x], g[y]))
        pending.emplace_back(g[x], g[y]);
  }
  return FiniteEquivalence::from_union_find(uf);
}

/// All congruences of a, as the join-closure of Δ and the principal
/// congruences. Sorted by decreasing class count, then by labels, so Δ comes
/// first and ∇ last.
inline std::vector<FiniteEquivalence> congruences(GSet const &a, Caps const &caps = {})
{
  auto n = a.size();
  std::unordered_set<FiniteEquivalence, EquivalenceHash> seen;
  std::vector<FiniteEquivalence> principals;

  auto delta = FiniteEquivalence::identity(n);
  seen.insert(delta);

  auto too_many = [&] {
    return Error(ErrorCode::LatticeCapExceeded,
                 "more than " + std::to_string(caps.max_congruences) + " congruences");
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto theta = principal_congruence(a, i, j);
      if (seen.insert(theta).second) {
        principals.push_back(theta);
        if (seen.size() > caps.max_congruences)
          throw too_many();
      }
    }
  }

  std::vector<FiniteEquivalence> all(seen.begin(), seen.end());
  for (std::size_t next = 0; next < all.size(); ++next) {
    for (auto const &p : principals) {
      if (p.refines(all[next]))
        continue;
      auto joined = all[next].join(p);
      if (seen.insert(joined).second) {
        all.push_back(std::move(joined));
        if (all.size() > caps.max_congruences)
          throw too_many();
      }
    }
  }

  std::sort(all.begin(), all.end(), [](FiniteEquivalence const &x, FiniteEquivalence const &y) {
    if (x.class_count() != y.class_count())
      return x.class_count() > y.class_count();
    return x.labels() < y.labels();
  });
  return all;
}

/// Con(A), ordered by refinement.
inline FiniteLattice congruence_lattice(GSet const &a, Caps const &caps = {})
{
  auto family = congruences(a, caps);
  if (family.size() > kMaxLatticeSize)
    throw Error(ErrorCode::LatticeCapExceeded,
                std::to_string(family.size()) + " congruences are too many to tabulate");
  return lattice_of_equivalences(family);
}

/// Transitive, and only the identity of G fixes a point. For a transitive
/// action that is the same as |G| = |A|, by orbit-stabilizer.
inline bool is_regular(GSet const &a)
{
  if (a.group_order() != a.size())
    return false;
  std::vector<bool> reached(a.size(), false);
  std::vector<std::uint32_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto const &g : a.generators()) {
      if (!reached[g[x]]) {
        reached[g[x]] = true;
        stack.push_back(g[x]);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

} // namespace oclattice

#endif // OCLATTICE_GSETS_HPP
