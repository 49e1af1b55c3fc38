#ifndef OCLATTICE_DECIDERS_HPP
#define OCLATTICE_DECIDERS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "words.hpp"

namespace oclattice
{

/// The fixed varieties whose word problems are solved in closed form.
struct FixedVariety
{
  enum class Tag { COM, LZ, RZ, X, XDUAL, PK };

  Tag tag = Tag::COM;
  std::uint32_t k = 0; // only meaningful for PK

  static FixedVariety com() { return {Tag::COM, 0}; }
  static FixedVariety lz() { return {Tag::LZ, 0}; }
  static FixedVariety rz() { return {Tag::RZ, 0}; }
  static FixedVariety x() { return {Tag::X, 0}; }
  static FixedVariety x_dual() { return {Tag::XDUAL, 0}; }
  static FixedVariety pk(std::uint32_t k) { return {Tag::PK, k}; }

  friend bool operator==(FixedVariety const &, FixedVariety const &) = default;
};

inline std::string to_string(FixedVariety f)
{
  switch (f.tag) {
  case FixedVariety::Tag::COM: return "COM";
  case FixedVariety::Tag::LZ: return "LZ";
  case FixedVariety::Tag::RZ: return "RZ";
  case FixedVariety::Tag::X: return "X";
  case FixedVariety::Tag::XDUAL: return "XDUAL";
  case FixedVariety::Tag::PK: return "P" + std::to_string(f.k);
  }
  return "?";
}

inline bool holds_in_com(Word const &u, Word const &v)
{ return is_balanced(u, v); }

inline bool holds_in_lz(Word const &u, Word const &v)
{ return u.front() == v.front(); }

inline bool holds_in_rz(Word const &u, Word const &v)
{ return holds_in_lz(reverse(u), reverse(v)); }

inline bool holds_in_x(Word const &u, Word const &v)
{
  if (!is_balanced(u, v))
    return false;
  if (u == v)
    return true;
  if (u.size() < 2)
    return false;

  bool same_first = u[0] == v[0];
  bool same_second = u[1] == v[1];
  bool u_first_multiple = multiplicity(u[0], u) > 1;
  bool u_second_multiple = multiplicity(u[1], u) > 1;
  bool v_first_multiple = multiplicity(v[0], v) > 1;
  bool v_second_multiple = multiplicity(v[1], v) > 1;

  if (same_first && same_second)
    return true;
  if (same_first && u_second_multiple && v_second_multiple)
    return true;
  return u_first_multiple && u_second_multiple && v_first_multiple && v_second_multiple;
}

inline bool holds_in_x_dual(Word const &u, Word const &v)
{ return holds_in_x(reverse(u), reverse(v)); }

/// Word problem of P_k: a balanced pair of words longer than 2k+1 is an
/// identity of P_k iff the length-k prefixes and suffixes agree; shorter
/// words admit no nontrivial identity.
inline bool holds_in_pk(Word const &u, Word const &v, std::uint32_t k)
{
  if (!is_balanced(u, v))
    return false;
  if (u.size() <= 2 * std::size_t{k} + 1)
    return u == v;
  return std::equal(u.begin(), u.begin() + k, v.begin()) &&
         std::equal(u.end() - k, u.end(), v.end() - k);
}

inline bool holds_in(FixedVariety f, Word const &u, Word const &v)
{
  switch (f.tag) {
  case FixedVariety::Tag::COM: return holds_in_com(u, v);
  case FixedVariety::Tag::LZ: return holds_in_lz(u, v);
  case FixedVariety::Tag::RZ: return holds_in_rz(u, v);
  case FixedVariety::Tag::X: return holds_in_x(u, v);
  case FixedVariety::Tag::XDUAL: return holds_in_x_dual(u, v);
  case FixedVariety::Tag::PK: return holds_in_pk(u, v, f.k);
  }
  return false;
}

/// f ⊆ var(sigma) iff every defining identity of sigma holds in f.
inline bool contains_fixed(Presentation const &sigma, FixedVariety f)
{
  return std::all_of(sigma.begin(), sigma.end(),
                     [f](Identity const &id) { return holds_in(f, id.lhs, id.rhs); });
}

// ---------------------------------------------------------------------------
// defining identities

/// x_1...x_k y z t_1...t_k = x_1...x_k z y t_1...t_k over letters 1..2k+2.
inline Identity pk_identity(std::uint32_t k)
{
  std::vector<Letter> lhs, rhs;
  for (std::uint32_t i = 1; i <= k; ++i) {
    lhs.emplace_back(i);
    rhs.emplace_back(i);
  }
  Letter y(k + 1), z(k + 2);
  lhs.push_back(y);
  lhs.push_back(z);
  rhs.push_back(z);
  rhs.push_back(y);
  for (std::uint32_t i = 1; i <= k; ++i) {
    lhs.emplace_back(k + 2 + i);
    rhs.emplace_back(k + 2 + i);
  }
  return {Word(std::move(lhs)), Word(std::move(rhs))};
}

inline Presentation defining_presentation(FixedVariety f)
{
  switch (f.tag) {
  case FixedVariety::Tag::COM:
    return Presentation({parse_identity("xy = yx")}, "COM");
  case FixedVariety::Tag::LZ:
    return Presentation({parse_identity("xy = x")}, "LZ");
  case FixedVariety::Tag::RZ:
    return Presentation({parse_identity("xy = y")}, "RZ");
  case FixedVariety::Tag::X:
    return Presentation({parse_identity("xyzt = xytz"), parse_identity("xxyy = yyxx"),
                         parse_identity("yyxx = xyxy")},
                        "X");
  case FixedVariety::Tag::XDUAL:
    return Presentation(defining_presentation(FixedVariety::x()).reversed().identities(), "XDUAL");
  case FixedVariety::Tag::PK:
    return Presentation({pk_identity(f.k)}, "P" + std::to_string(f.k));
  }
  return {};
}

} // namespace oclattice

#endif // OCLATTICE_DECIDERS_HPP
