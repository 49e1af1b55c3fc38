#ifndef OCLATTICE_PERM_HPP
#define OCLATTICE_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace oclattice
{

/// Permutation of {1..m}, stored 0-based: images[i] is g(i+1)-1.
class Perm
{
public:
  Perm() = default;

  explicit Perm(std::vector<std::uint32_t> images)
  : _images(std::move(images))
  {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x])
        throw Error(ErrorCode::InvariantViolation, "not a permutation");
      seen[x] = true;
    }
  }

  static Perm identity(std::size_t degree)
  {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), std::uint32_t{0});
    return Perm(std::move(images));
  }

  /// Transposition of the 1-based points a and b.
  static Perm transposition(std::size_t degree, std::uint32_t a, std::uint32_t b)
  {
    auto p = identity(degree);
    std::swap(p._images[a - 1], p._images[b - 1]);
    return p;
  }

  /// Builds from 1-based images, e.g. {2,3,1} for the cycle 1→2→3→1.
  static Perm from_one_based(std::vector<std::uint32_t> images)
  {
    for (auto &x : images) {
      if (x == 0)
        throw Error(ErrorCode::InvariantViolation, "1-based images must be positive");
      --x;
    }
    return Perm(std::move(images));
  }

  std::size_t degree() const noexcept { return _images.size(); }

  /// Image of the 0-based point i.
  std::uint32_t operator[](std::size_t i) const { return _images[i]; }

  std::vector<std::uint32_t> const &images() const noexcept { return _images; }

  bool is_identity() const
  {
    for (std::uint32_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return false;
    return true;
  }

  /// (this * other)(i) = this(other(i)).
  Perm operator*(Perm const &other) const
  {
    std::vector<std::uint32_t> images(_images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      images[i] = _images[other._images[i]];
    return Perm(std::move(images));
  }

  Perm inverse() const
  {
    std::vector<std::uint32_t> images(_images.size());
    for (std::uint32_t i = 0; i < _images.size(); ++i)
      images[_images[i]] = i;
    return Perm(std::move(images));
  }

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &a, Perm const &b) { return a._images <=> b._images; }

private:
  std::vector<std::uint32_t> _images;
};

/// One-line notation with 1-based images, e.g. "[1 3 2]".
inline std::string to_string(Perm const &g)
{
  std::string out = "[";
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(g[i] + 1);
  }
  return out + "]";
}

/// Finite permutation group stored by full element enumeration, sorted,
/// identity first.
class PermGroup
{
public:
  PermGroup(std::size_t degree, std::vector<Perm> elements, std::vector<Perm> generators)
  : _degree(degree), _elements(std::move(elements)), _generators(std::move(generators))
  {
    std::sort(_elements.begin(), _elements.end());
  }

  std::size_t degree() const noexcept { return _degree; }
  std::size_t order() const noexcept { return _elements.size(); }
  std::vector<Perm> const &elements() const noexcept { return _elements; }
  std::vector<Perm> const &generators() const noexcept { return _generators; }

  bool contains(Perm const &g) const
  { return std::binary_search(_elements.begin(), _elements.end(), g); }

  /// Position of g in elements().
  std::size_t index_of(Perm const &g) const
  {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), g);
    if (it == _elements.end() || *it != g)
      throw Error(ErrorCode::InvariantViolation, to_string(g) + " is not a group element");
    return static_cast<std::size_t>(it - _elements.begin());
  }

  bool is_closed() const
  {
    if (!contains(Perm::identity(_degree)))
      return false;
    for (auto const &a : _elements) {
      if (!contains(a.inverse()))
        return false;
      for (auto const &b : _elements)
        if (!contains(a * b))
          return false;
    }
    return true;
  }

private:
  std::size_t _degree;
  std::vector<Perm> _elements;
  std::vector<Perm> _generators;
};

inline constexpr std::size_t kMaxGroupDegree = 8;

/// G_λ = {g ∈ S_m | λ_i = λ_{g(i)}}: the direct product of the symmetric
/// groups on blocks of equal components.
inline PermGroup g_lambda(Partition const &p)
{
  std::size_t m = p.parts();
  if (m > kMaxGroupDegree)
    throw Error(ErrorCode::DegreeCapExceeded,
                "G_lambda is enumerated only up to degree " + std::to_string(kMaxGroupDegree));

  std::vector<Perm> elements;
  std::vector<std::uint32_t> images(m);
  std::iota(images.begin(), images.end(), std::uint32_t{0});
  do {
    bool preserves = true;
    for (std::size_t i = 0; i < m && preserves; ++i)
      preserves = p[i] == p[images[i]];
    if (preserves)
      elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<Perm> generators;
  for (std::uint32_t i = 1; i < m; ++i)
    if (p[i - 1] == p[i])
      generators.push_back(Perm::transposition(m, i, i + 1));

  return PermGroup(m, std::move(elements), std::move(generators));
}

inline PermGroup symmetric_group(std::size_t n)
{ return g_lambda(Partition(std::vector<std::uint32_t>(n, 1))); }

/// Renames every letter x_i to x_{g(i)}.
inline Word act_on_word(Perm const &g, Word const &w)
{
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter x : w) {
    if (x.index > g.degree())
      throw Error(ErrorCode::DegreeMismatch,
                  to_string(x) + " is outside the degree " + std::to_string(g.degree()) + " permutation");
    letters.emplace_back(g[x.index - 1] + 1);
  }
  return Word(std::move(letters));
}

} // namespace oclattice

#endif // OCLATTICE_PERM_HPP
