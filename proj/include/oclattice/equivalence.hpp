#ifndef OCLATTICE_EQUIVALENCE_HPP
#define OCLATTICE_EQUIVALENCE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"

namespace oclattice
{

class UnionFind
{
public:
  explicit UnionFind(std::size_t n)
  : _parent(n), _rank(n, 0)
  { std::iota(_parent.begin(), _parent.end(), std::uint32_t{0}); }

  std::size_t size() const noexcept { return _parent.size(); }

  std::uint32_t find(std::uint32_t x)
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  /// Returns true when two distinct blocks were merged.
  bool unite(std::uint32_t a, std::uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (_rank[a] < _rank[b])
      std::swap(a, b);
    _parent[b] = a;
    if (_rank[a] == _rank[b])
      ++_rank[a];
    return true;
  }

private:
  std::vector<std::uint32_t> _parent;
  std::vector<std::uint8_t> _rank;
};

/// Equivalence relation on {0, ..., n-1}. Class ids are contiguous and
/// numbered in order of first occurrence, so two equal relations always have
/// identical class_of vectors.
class FiniteEquivalence
{
public:
  FiniteEquivalence() = default;

  /// Canonicalizes an arbitrary labelling.
  template<typename Label>
  static FiniteEquivalence from_labels(std::vector<Label> const &labels)
  {
    FiniteEquivalence eq;
    eq._class_of.resize(labels.size());
    std::map<Label, std::uint32_t> ids;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = ids.emplace(labels[i], static_cast<std::uint32_t>(ids.size()));
      eq._class_of[i] = it->second;
    }
    eq._classes = static_cast<std::uint32_t>(ids.size());
    return eq;
  }

  static FiniteEquivalence from_union_find(UnionFind &uf)
  {
    FiniteEquivalence eq;
    std::size_t n = uf.size();
    eq._class_of.resize(n);
    std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      auto r = uf.find(i);
      if (id_of_root[r] == UINT32_MAX)
        id_of_root[r] = next++;
      eq._class_of[i] = id_of_root[r];
    }
    eq._classes = next;
    return eq;
  }

  static FiniteEquivalence identity(std::size_t n)
  {
    FiniteEquivalence eq;
    eq._class_of.resize(n);
    std::iota(eq._class_of.begin(), eq._class_of.end(), std::uint32_t{0});
    eq._classes = static_cast<std::uint32_t>(n);
    return eq;
  }

  static FiniteEquivalence full(std::size_t n)
  {
    FiniteEquivalence eq;
    eq._class_of.assign(n, 0);
    eq._classes = n == 0 ? 0 : 1;
    return eq;
  }

  std::size_t size() const noexcept { return _class_of.size(); }
  std::size_t class_count() const noexcept { return _classes; }
  std::uint32_t class_of(std::size_t i) const { return _class_of[i]; }
  std::vector<std::uint32_t> const &labels() const noexcept { return _class_of; }

  bool related(std::size_t i, std::size_t j) const
  { return _class_of[i] == _class_of[j]; }

  /// Members of every class, each list ascending, classes by first member.
  std::vector<std::vector<std::uint32_t>> classes() const
  {
    std::vector<std::vector<std::uint32_t>> out(_classes);
    for (std::uint32_t i = 0; i < _class_of.size(); ++i)
      out[_class_of[i]].push_back(i);
    return out;
  }

  /// True when every class of *this lies inside a class of coarser.
  bool refines(FiniteEquivalence const &coarser) const
  {
    check_same_size(coarser);
    std::vector<std::uint32_t> image(_classes, UINT32_MAX);
    for (std::size_t i = 0; i < _class_of.size(); ++i) {
      auto &slot = image[_class_of[i]];
      if (slot == UINT32_MAX)
        slot = coarser._class_of[i];
      else if (slot != coarser._class_of[i])
        return false;
    }
    return true;
  }

  /// Transitive closure of the union.
  FiniteEquivalence join(FiniteEquivalence const &other) const
  {
    check_same_size(other);
    UnionFind uf(size());
    std::vector<std::uint32_t> first_a(_classes, UINT32_MAX), first_b(other._classes, UINT32_MAX);
    for (std::uint32_t i = 0; i < size(); ++i) {
      auto &fa = first_a[_class_of[i]];
      if (fa == UINT32_MAX)
        fa = i;
      else
        uf.unite(fa, i);
      auto &fb = first_b[other._class_of[i]];
      if (fb == UINT32_MAX)
        fb = i;
      else
        uf.unite(fb, i);
    }
    return from_union_find(uf);
  }

  /// Intersection.
  FiniteEquivalence meet(FiniteEquivalence const &other) const
  {
    check_same_size(other);
    std::vector<std::uint64_t> pairs(size());
    for (std::size_t i = 0; i < size(); ++i)
      pairs[i] = (std::uint64_t{_class_of[i]} << 32) | other._class_of[i];
    return from_labels(pairs);
  }

  friend bool operator==(FiniteEquivalence const &, FiniteEquivalence const &) = default;

private:
  void check_same_size(FiniteEquivalence const &other) const
  {
    if (other.size() != size())
      throw Error(ErrorCode::InvariantViolation, "equivalences on sets of different size");
  }

  std::vector<std::uint32_t> _class_of;
  std::uint32_t _classes = 0;
};

struct EquivalenceHash
{
  std::size_t operator()(FiniteEquivalence const &eq) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto c : eq.labels()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace oclattice

#endif // OCLATTICE_EQUIVALENCE_HPP
