#ifndef OCLATTICE_LATTICES_HPP
#define OCLATTICE_LATTICES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "equivalence.hpp"
#include "error.hpp"
#include "perm.hpp"

namespace oclattice
{

/// Largest lattice materialized as full tables.
inline constexpr std::size_t kMaxLatticeSize = 4200;

/// Finite lattice given by its order, join and meet tables.
class FiniteLattice
{
public:
  using Index = std::uint32_t;

  /// Builds the tables from join and meet operations; a <= b iff a ∧ b = a.
  template<typename Join, typename Meet>
  static FiniteLattice from_operations(std::size_t n, Join &&join, Meet &&meet,
                                       std::vector<std::string> labels = {})
  {
    check_size(n);
    FiniteLattice l(n, std::move(labels));
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        l._join[a * n + b] = join(a, b);
        l._meet[a * n + b] = meet(a, b);
      }
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        l._leq[a * n + b] = l._meet[a * n + b] == a;
    l.locate_bounds();
    return l;
  }

  /// Builds join and meet from an order relation; throws InvariantViolation
  /// when the order is not a lattice.
  template<typename Leq>
  static FiniteLattice from_order(std::size_t n, Leq &&leq, std::vector<std::string> labels = {})
  {
    check_size(n);
    FiniteLattice l(n, std::move(labels));
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        l._leq[a * n + b] = leq(a, b);

    for (Index a = 0; a < n; ++a) {
      if (!l.leq(a, a))
        throw Error(ErrorCode::InvariantViolation, "order is not reflexive");
      for (Index b = 0; b < n; ++b) {
        if (a != b && l.leq(a, b) && l.leq(b, a))
          throw Error(ErrorCode::InvariantViolation, "order is not antisymmetric");
      }
    }

    for (Index a = 0; a < n; ++a) {
      for (Index b = a; b < n; ++b) {
        auto lub = l.extremal_bound(a, b, true);
        auto glb = l.extremal_bound(a, b, false);
        if (!lub || !glb)
          throw Error(ErrorCode::InvariantViolation, "order is not a lattice");
        l._join[a * n + b] = l._join[b * n + a] = *lub;
        l._meet[a * n + b] = l._meet[b * n + a] = *glb;
      }
    }
    l.locate_bounds();
    return l;
  }

  std::size_t size() const noexcept { return _n; }
  bool leq(Index a, Index b) const { return _leq[a * _n + b] != 0; }
  Index join(Index a, Index b) const { return _join[a * _n + b]; }
  Index meet(Index a, Index b) const { return _meet[a * _n + b]; }
  Index bottom() const noexcept { return _bottom; }
  Index top() const noexcept { return _top; }
  std::vector<std::string> const &labels() const noexcept { return _labels; }

  /// Full check of the lattice axioms; cubic in the size.
  bool valid() const
  {
    for (Index a = 0; a < _n; ++a) {
      if (!leq(a, a) || !leq(_bottom, a) || !leq(a, _top))
        return false;
      for (Index b = 0; b < _n; ++b) {
        if (a != b && leq(a, b) && leq(b, a))
          return false;
        for (Index c = 0; c < _n; ++c)
          if (leq(a, b) && leq(b, c) && !leq(a, c))
            return false;
        Index j = join(a, b), m = meet(a, b);
        if (!leq(a, j) || !leq(b, j) || !leq(m, a) || !leq(m, b))
          return false;
        for (Index c = 0; c < _n; ++c) {
          if (leq(a, c) && leq(b, c) && !leq(j, c))
            return false;
          if (leq(c, a) && leq(c, b) && !leq(c, m))
            return false;
        }
      }
    }
    return true;
  }

  /// b covers a.
  bool covers(Index b, Index a) const
  {
    if (a == b || !leq(a, b))
      return false;
    for (Index c = 0; c < _n; ++c)
      if (c != a && c != b && leq(a, c) && leq(c, b))
        return false;
    return true;
  }

  std::size_t atom_count() const
  {
    std::size_t count = 0;
    for (Index a = 0; a < _n; ++a)
      count += covers(a, _bottom);
    return count;
  }

  /// Length of the longest chain from bottom to each element.
  std::vector<std::size_t> ranks() const
  {
    std::vector<Index> order(_n);
    for (Index a = 0; a < _n; ++a)
      order[a] = a;
    // a strictly below b implies fewer elements below a
    std::vector<std::size_t> below(_n, 0);
    for (Index a = 0; a < _n; ++a)
      for (Index b = 0; b < _n; ++b)
        below[a] += leq(b, a);
    std::sort(order.begin(), order.end(), [&](Index x, Index y) { return below[x] < below[y]; });

    std::vector<std::size_t> rank(_n, 0);
    for (Index b : order)
      for (Index a = 0; a < _n; ++a)
        if (a != b && leq(a, b))
          rank[b] = std::max(rank[b], rank[a] + 1);
    return rank;
  }

  std::size_t height() const
  { return _n == 0 ? 0 : ranks()[_top]; }

  friend bool operator==(FiniteLattice const &a, FiniteLattice const &b)
  { return a._n == b._n && a._leq == b._leq && a._join == b._join && a._meet == b._meet; }

private:
  FiniteLattice(std::size_t n, std::vector<std::string> labels)
  : _n(n), _leq(n * n, 0), _join(n * n, 0), _meet(n * n, 0), _labels(std::move(labels))
  {
    if (!_labels.empty() && _labels.size() != n)
      throw Error(ErrorCode::InvariantViolation, "label count does not match lattice size");
  }

  static void check_size(std::size_t n)
  {
    if (n == 0)
      throw Error(ErrorCode::InvariantViolation, "a lattice needs at least one element");
    if (n > kMaxLatticeSize)
      throw Error(ErrorCode::SizeCapExceeded,
                  "lattice of " + std::to_string(n) + " elements exceeds " + std::to_string(kMaxLatticeSize));
  }

  std::optional<Index> extremal_bound(Index a, Index b, bool upper) const
  {
    std::optional<Index> best;
    for (Index c = 0; c < _n; ++c) {
      bool bound = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
      if (!bound)
        continue;
      if (!best || (upper ? leq(c, *best) : leq(*best, c)))
        best = c;
    }
    if (!best)
      return std::nullopt;
    for (Index c = 0; c < _n; ++c) {
      bool bound = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
      if (bound && !(upper ? leq(*best, c) : leq(c, *best)))
        return std::nullopt;
    }
    return best;
  }

  void locate_bounds()
  {
    _bottom = 0;
    _top = 0;
    for (Index a = 1; a < _n; ++a) {
      _bottom = meet(_bottom, a);
      _top = join(_top, a);
    }
  }

  friend FiniteLattice dual(FiniteLattice const &l);

  std::size_t _n = 0;
  std::vector<std::uint8_t> _leq;
  std::vector<Index> _join;
  std::vector<Index> _meet;
  std::vector<std::string> _labels;
  Index _bottom = 0;
  Index _top = 0;
};

inline FiniteLattice dual(FiniteLattice const &l)
{
  FiniteLattice d = l;
  auto n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      d._leq[a * n + b] = l._leq[b * n + a];
  std::swap(d._join, d._meet);
  std::swap(d._bottom, d._top);
  return d;
}

// ---------------------------------------------------------------------------
// small named lattices

inline FiniteLattice chain(std::size_t n)
{
  return FiniteLattice::from_operations(
    n, [](auto a, auto b) { return std::max(a, b); }, [](auto a, auto b) { return std::min(a, b); });
}

/// M3: bottom 0, atoms 1..3, top 4.
inline FiniteLattice diamond_m3()
{
  return FiniteLattice::from_order(5, [](auto a, auto b) {
    return a == b || a == 0 || b == 4;
  });
}

/// N5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
inline FiniteLattice pentagon_n5()
{
  return FiniteLattice::from_order(5, [](auto a, auto b) {
    return a == b || a == 0 || b == 4 || (a == 1 && b == 2);
  });
}

/// Subsets of a k-element set.
inline FiniteLattice boolean_lattice(std::size_t k)
{
  return FiniteLattice::from_operations(
    std::size_t{1} << k, [](auto a, auto b) { return a | b; }, [](auto a, auto b) { return a & b; });
}

inline FiniteLattice direct_product(FiniteLattice const &l1, FiniteLattice const &l2)
{
  auto n2 = l2.size();
  if (l1.size() * n2 > kMaxLatticeSize)
    throw Error(ErrorCode::SizeCapExceeded, "direct product too large");
  using Index = FiniteLattice::Index;
  auto split = [n2](Index a) { return std::pair<Index, Index>(a / n2, a % n2); };
  return FiniteLattice::from_operations(
    l1.size() * n2,
    [&](Index a, Index b) {
      auto [a1, a2] = split(a);
      auto [b1, b2] = split(b);
      return static_cast<Index>(l1.join(a1, b1) * n2 + l2.join(a2, b2));
    },
    [&](Index a, Index b) {
      auto [a1, a2] = split(a);
      auto [b1, b2] = split(b);
      return static_cast<Index>(l1.meet(a1, b1) * n2 + l2.meet(a2, b2));
    });
}

// ---------------------------------------------------------------------------
// lattice terms and identities

class LatticeTerm
{
public:
  enum class Kind { Variable, Join, Meet };

  static LatticeTerm var(std::uint32_t index)
  { return LatticeTerm(Kind::Variable, index, nullptr, nullptr); }

  friend LatticeTerm operator|(LatticeTerm const &a, LatticeTerm const &b)
  { return LatticeTerm(Kind::Join, 0, std::make_shared<LatticeTerm>(a), std::make_shared<LatticeTerm>(b)); }

  friend LatticeTerm operator&(LatticeTerm const &a, LatticeTerm const &b)
  { return LatticeTerm(Kind::Meet, 0, std::make_shared<LatticeTerm>(a), std::make_shared<LatticeTerm>(b)); }

  Kind kind() const noexcept { return _kind; }
  std::uint32_t variable() const noexcept { return _var; }
  LatticeTerm const &left() const { return *_left; }
  LatticeTerm const &right() const { return *_right; }

  std::uint32_t variable_count() const
  {
    if (_kind == Kind::Variable)
      return _var + 1;
    return std::max(_left->variable_count(), _right->variable_count());
  }

  /// Same term with joins and meets exchanged.
  LatticeTerm dual() const
  {
    switch (_kind) {
    case Kind::Variable: return *this;
    case Kind::Join: return _left->dual() & _right->dual();
    case Kind::Meet: return _left->dual() | _right->dual();
    }
    return *this;
  }

private:
  LatticeTerm(Kind kind, std::uint32_t var, std::shared_ptr<LatticeTerm const> l,
              std::shared_ptr<LatticeTerm const> r)
  : _kind(kind), _var(var), _left(std::move(l)), _right(std::move(r))
  {}

  Kind _kind;
  std::uint32_t _var;
  std::shared_ptr<LatticeTerm const> _left, _right;
};

inline std::string to_string(LatticeTerm const &t)
{
  switch (t.kind()) {
  case LatticeTerm::Kind::Variable: return "v" + std::to_string(t.variable());
  case LatticeTerm::Kind::Join: return "(" + to_string(t.left()) + " v " + to_string(t.right()) + ")";
  case LatticeTerm::Kind::Meet: return "(" + to_string(t.left()) + " ^ " + to_string(t.right()) + ")";
  }
  return "?";
}

struct LatticeIdentity
{
  LatticeTerm lhs;
  LatticeTerm rhs;

  LatticeIdentity dual() const { return {lhs.dual(), rhs.dual()}; }
};

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)
inline LatticeIdentity distributive_law()
{
  auto x = LatticeTerm::var(0), y = LatticeTerm::var(1), z = LatticeTerm::var(2);
  return {x & (y | z), (x & y) | (x & z)};
}

/// x ∧ (y ∨ (x ∧ z)) = (x ∧ y) ∨ (x ∧ z)
inline LatticeIdentity modular_law()
{
  auto x = LatticeTerm::var(0), y = LatticeTerm::var(1), z = LatticeTerm::var(2);
  return {x & (y | (x & z)), (x & y) | (x & z)};
}

namespace detail
{

// Postfix program: variables push, operators pop two and push one.
struct TermProgram
{
  struct Op
  {
    LatticeTerm::Kind kind;
    std::uint32_t var;
  };
  std::vector<Op> ops;

  explicit TermProgram(LatticeTerm const &t) { emit(t); }

  FiniteLattice::Index eval(FiniteLattice const &l, std::vector<FiniteLattice::Index> const &values,
                            std::vector<FiniteLattice::Index> &stack) const
  {
    stack.clear();
    for (auto const &op : ops) {
      if (op.kind == LatticeTerm::Kind::Variable) {
        stack.push_back(values[op.var]);
        continue;
      }
      auto b = stack.back();
      stack.pop_back();
      auto a = stack.back();
      stack.back() = op.kind == LatticeTerm::Kind::Join ? l.join(a, b) : l.meet(a, b);
    }
    return stack.back();
  }

private:
  void emit(LatticeTerm const &t)
  {
    if (t.kind() != LatticeTerm::Kind::Variable) {
      emit(t.left());
      emit(t.right());
    }
    ops.push_back({t.kind(), t.variable()});
  }
};

} // namespace detail

inline constexpr std::uint64_t kMaxAssignments = 10'000'000;

/// Evaluates both sides under all size^variables assignments.
inline bool satisfies_identity(FiniteLattice const &l, LatticeIdentity const &id,
                               std::uint64_t max_assignments = kMaxAssignments)
{
  auto vars = std::max(id.lhs.variable_count(), id.rhs.variable_count());
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < vars; ++i) {
    total *= l.size();
    if (total > max_assignments)
      throw Error(ErrorCode::AssignmentCapExceeded,
                  std::to_string(l.size()) + "^" + std::to_string(vars) + " assignments exceed the cap");
  }

  detail::TermProgram lhs(id.lhs), rhs(id.rhs);
  std::vector<FiniteLattice::Index> values(vars, 0), stack;
  while (true) {
    if (lhs.eval(l, values, stack) != rhs.eval(l, values, stack))
      return false;
    std::size_t i = 0;
    while (i < vars && ++values[i] == l.size())
      values[i++] = 0;
    if (i == vars)
      return true;
  }
}

inline bool is_distributive(FiniteLattice const &l)
{ return satisfies_identity(l, distributive_law()); }

inline bool is_modular(FiniteLattice const &l)
{ return satisfies_identity(l, modular_law()); }

// ---------------------------------------------------------------------------
// lattices of equivalences, partitions and subgroups

inline std::string to_string(FiniteEquivalence const &eq)
{
  std::string out;
  for (auto const &block : eq.classes()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

/// Lattice on a join- and meet-closed family of equivalences on one set,
/// ordered by refinement. The family must contain all joins and meets of
/// its members.
inline FiniteLattice lattice_of_equivalences(std::vector<FiniteEquivalence> const &family)
{
  std::unordered_map<FiniteEquivalence, FiniteLattice::Index, EquivalenceHash> position;
  for (std::size_t i = 0; i < family.size(); ++i)
    position.emplace(family[i], static_cast<FiniteLattice::Index>(i));

  auto lookup = [&](FiniteEquivalence const &eq) {
    auto it = position.find(eq);
    if (it == position.end())
      throw Error(ErrorCode::InvariantViolation, "family of equivalences is not closed");
    return it->second;
  };

  std::vector<std::string> labels;
  labels.reserve(family.size());
  for (auto const &eq : family)
    labels.push_back(to_string(eq));

  return FiniteLattice::from_operations(
    family.size(),
    [&](auto a, auto b) { return a == b ? a : lookup(family[a].join(family[b])); },
    [&](auto a, auto b) { return a == b ? a : lookup(family[a].meet(family[b])); },
    std::move(labels));
}

inline constexpr std::size_t kMaxPartitionLatticeDegree = 8;

/// All set partitions of {0..n-1} as canonical equivalences, in
/// lexicographic order of their restricted growth strings.
inline std::vector<FiniteEquivalence> all_equivalences(std::size_t n)
{
  std::vector<FiniteEquivalence> out;
  std::vector<std::uint32_t> rgs(n, 0);
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t i, std::uint32_t max_label) {
    if (i == n) {
      out.push_back(FiniteEquivalence::from_labels(rgs));
      return;
    }
    for (std::uint32_t c = 0; c <= max_label + 1; ++c) {
      rgs[i] = c;
      fill(i + 1, std::max(max_label, c));
    }
  };
  if (n == 0)
    return out;
  rgs[0] = 0;
  fill(1, 0);
  return out;
}

/// Part(n), the lattice of all equivalence relations on an n-set.
inline FiniteLattice partition_lattice(std::size_t n)
{
  if (n == 0 || n > kMaxPartitionLatticeDegree)
    throw Error(ErrorCode::SizeCapExceeded,
                "partition lattices are built for 1 <= n <= " + std::to_string(kMaxPartitionLatticeDegree));
  return lattice_of_equivalences(all_equivalences(n));
}

inline constexpr std::size_t kMaxSubgroupLatticeDegree = 4;

/// Sub(S_n): subgroups as bitmasks over the sorted elements of S_n.
inline FiniteLattice subgroup_lattice_sym(std::size_t n)
{
  if (n == 0 || n > kMaxSubgroupLatticeDegree)
    throw Error(ErrorCode::SizeCapExceeded,
                "subgroup lattices are built for 1 <= n <= " + std::to_string(kMaxSubgroupLatticeDegree));

  auto group = symmetric_group(n);
  auto const &elems = group.elements();
  std::size_t order = elems.size();

  std::vector<std::size_t> product(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      product[a * order + b] = group.index_of(elems[a] * elems[b]);

  using Mask = std::uint32_t;
  auto generate = [&](Mask seed) {
    Mask h = seed | 1u; // identity is element 0
    bool grown = true;
    while (grown) {
      grown = false;
      for (std::size_t a = 0; a < order; ++a) {
        if (!(h >> a & 1u))
          continue;
        for (std::size_t b = 0; b < order; ++b) {
          if (!(h >> b & 1u))
            continue;
          Mask bit = Mask{1} << product[a * order + b];
          if (!(h & bit)) {
            h |= bit;
            grown = true;
          }
        }
      }
    }
    return h;
  };

  std::vector<Mask> subgroups;
  auto add = [&](Mask h) {
    if (std::find(subgroups.begin(), subgroups.end(), h) == subgroups.end())
      subgroups.push_back(h);
  };
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = a; b < order; ++b)
      add(generate((Mask{1} << a) | (Mask{1} << b)));

  for (std::size_t done = 0; done < subgroups.size(); ++done)
    for (std::size_t other = 0; other <= done; ++other)
      add(generate(subgroups[done] | subgroups[other]));

  std::sort(subgroups.begin(), subgroups.end(), [](Mask a, Mask b) {
    auto pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  auto position = [&](Mask h) {
    return static_cast<FiniteLattice::Index>(std::find(subgroups.begin(), subgroups.end(), h) - subgroups.begin());
  };

  std::vector<std::string> labels;
  for (auto h : subgroups) {
    std::string label = "<";
    bool first = true;
    for (std::size_t a = 0; a < order; ++a) {
      if (h >> a & 1u) {
        if (!first)
          label += ' ';
        label += to_string(elems[a]);
        first = false;
      }
    }
    labels.push_back(label + ">");
  }

  return FiniteLattice::from_operations(
    subgroups.size(),
    [&](auto a, auto b) { return position(generate(subgroups[a] | subgroups[b])); },
    [&](auto a, auto b) { return position(subgroups[a] & subgroups[b]); },
    std::move(labels));
}

// ---------------------------------------------------------------------------
// isomorphism and embedding

inline constexpr std::size_t kMaxIsomorphismSize = 100;

namespace detail
{

struct ElementInvariant
{
  std::size_t rank, below, above, lower_covers, upper_covers;
  friend auto operator<=>(ElementInvariant const &, ElementInvariant const &) = default;
};

inline std::vector<ElementInvariant> element_invariants(FiniteLattice const &l)
{
  auto ranks = l.ranks();
  std::vector<ElementInvariant> out(l.size());
  for (FiniteLattice::Index a = 0; a < l.size(); ++a) {
    auto &inv = out[a];
    inv.rank = ranks[a];
    for (FiniteLattice::Index b = 0; b < l.size(); ++b) {
      inv.below += l.leq(b, a);
      inv.above += l.leq(a, b);
      inv.lower_covers += l.covers(a, b);
      inv.upper_covers += l.covers(b, a);
    }
  }
  return out;
}

} // namespace detail

/// Order isomorphism by backtracking over elements with equal invariants.
inline bool are_isomorphic(FiniteLattice const &l1, FiniteLattice const &l2)
{
  if (l1.size() > kMaxIsomorphismSize || l2.size() > kMaxIsomorphismSize)
    throw Error(ErrorCode::SizeCapExceeded, "isomorphism search is limited to 100 elements");
  if (l1.size() != l2.size())
    return false;

  auto inv1 = detail::element_invariants(l1);
  auto inv2 = detail::element_invariants(l2);
  {
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2)
      return false;
  }

  std::size_t n = l1.size();
  std::vector<FiniteLattice::Index> order(n);
  for (FiniteLattice::Index a = 0; a < n; ++a)
    order[a] = a;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return inv1[a].rank < inv1[b].rank; });

  std::vector<FiniteLattice::Index> image(n, 0);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == n)
      return true;
    auto x = order[depth];
    for (FiniteLattice::Index y = 0; y < n; ++y) {
      if (used[y] || !(inv1[x] == inv2[y]))
        continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        auto a = order[d];
        consistent = l1.leq(a, x) == l2.leq(image[a], y) && l1.leq(x, a) == l2.leq(y, image[a]);
      }
      if (!consistent)
        continue;
      image[x] = y;
      used[y] = true;
      if (assign(depth + 1))
        return true;
      used[y] = false;
    }
    return false;
  };
  return assign(0);
}

/// Whether l1 is isomorphic to a sublattice of l2.
inline bool embeds_into(FiniteLattice const &l1, FiniteLattice const &l2)
{
  if (l1.size() > 8 || l2.size() > 50)
    throw Error(ErrorCode::SizeCapExceeded, "embedding search is limited to |l1| <= 8, |l2| <= 50");
  if (l1.size() > l2.size())
    return false;

  std::size_t n = l1.size();
  auto ranks = l1.ranks();
  std::vector<FiniteLattice::Index> order(n);
  for (FiniteLattice::Index a = 0; a < n; ++a)
    order[a] = a;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return ranks[a] < ranks[b]; });

  constexpr auto unset = FiniteLattice::Index(-1);
  std::vector<FiniteLattice::Index> image(n, unset);
  std::vector<bool> used(l2.size(), false);

  auto consistent = [&](std::size_t depth) {
    for (std::size_t i = 0; i <= depth; ++i) {
      for (std::size_t j = 0; j <= depth; ++j) {
        auto a = order[i], b = order[j];
        auto fa = image[a], fb = image[b];
        if (l1.leq(a, b) != l2.leq(fa, fb))
          return false;
        auto j1 = image[l1.join(a, b)];
        if (j1 != unset && j1 != l2.join(fa, fb))
          return false;
        auto m1 = image[l1.meet(a, b)];
        if (m1 != unset && m1 != l2.meet(fa, fb))
          return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == n)
      return true;
    auto x = order[depth];
    for (FiniteLattice::Index y = 0; y < l2.size(); ++y) {
      if (used[y])
        continue;
      image[x] = y;
      used[y] = true;
      if (consistent(depth) && assign(depth + 1))
        return true;
      used[y] = false;
    }
    image[x] = unset;
    return false;
  };
  return assign(0);
}

// ---------------------------------------------------------------------------
// JSON export

inline nlohmann::json lattice_to_json(FiniteLattice const &l)
{
  nlohmann::json leq = nlohmann::json::array();
  for (FiniteLattice::Index a = 0; a < l.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (FiniteLattice::Index b = 0; b < l.size(); ++b)
      row.push_back(l.leq(a, b) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  nlohmann::json out = {{"size", l.size()}, {"leq", std::move(leq)}};
  if (!l.labels().empty())
    out["labels"] = l.labels();
  return out;
}

inline FiniteLattice lattice_from_json(nlohmann::json const &j)
{
  try {
    auto n = j.at("size").get<std::size_t>();
    auto const &leq = j.at("leq");
    if (leq.size() != n)
      throw Error(ErrorCode::ParseError, "leq table has the wrong number of rows");
    std::vector<std::uint8_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (leq[a].size() != n)
        throw Error(ErrorCode::ParseError, "leq table has a row of the wrong length");
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = leq[a][b].get<int>() != 0;
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteLattice::from_order(n, [&](auto a, auto b) { return table[a * n + b] != 0; }, std::move(labels));
  } catch (nlohmann::json::exception const &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

} // namespace oclattice

#endif // OCLATTICE_LATTICES_HPP
