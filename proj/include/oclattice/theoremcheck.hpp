#ifndef OCLATTICE_THEOREMCHECK_HPP
#define OCLATTICE_THEOREMCHECK_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deciders.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "words.hpp"

namespace oclattice
{

using BigInt = boost::multiprecision::cpp_int;

inline bool is_overcommutative(Presentation const &sigma)
{ return sigma.balanced(); }

// ---------------------------------------------------------------------------
// permutativity

/// The identity x_1...x_n = x_{g(1)}...x_{g(n)} with g nontrivial.
struct PermutativityWitness
{
  std::uint32_t n = 0;
  Perm g;

  Identity identity() const
  {
    std::vector<Letter> lhs, rhs;
    for (std::uint32_t i = 0; i < n; ++i) {
      lhs.emplace_back(i + 1);
      rhs.emplace_back(g[i] + 1);
    }
    return {Word(std::move(lhs)), Word(std::move(rhs))};
  }
};

struct PermutativityResult
{
  std::optional<PermutativityWitness> witness; // empty: none up to n_max
  std::uint32_t n_max = 0;

  bool permutative() const noexcept { return witness.has_value(); }
};

inline constexpr std::uint32_t kMaxPermutativityDegree = 7;

inline Content square_free_content(std::uint32_t n)
{
  Content c;
  for (std::uint32_t i = 1; i <= n; ++i)
    c[Letter(i)] = 1;
  return c;
}

/// Searches n = 2..n_max for a collapsed pair in W_(1^n). By renaming
/// invariance a collapsed pair exists iff x_1...x_n has a partner, and the
/// smallest partner gives g.
inline PermutativityResult is_permutative(Presentation const &sigma, std::uint32_t n_max, Caps const &caps = {})
{
  if (n_max < 2)
    throw Error(ErrorCode::PremiseNotMet, "n_max must be at least 2");
  if (n_max > kMaxPermutativityDegree)
    throw Error(ErrorCode::SizeCapExceeded,
                "permutation identities are searched up to length " + std::to_string(kMaxPermutativityDegree));

  for (std::uint32_t n = 2; n <= n_max; ++n) {
    auto phi = phi_lambda(sigma, square_free_content(n), caps);
    // words[0] is x_1...x_n
    auto cls = phi.classes.class_of(0);
    for (std::size_t i = 1; i < phi.words.size(); ++i) {
      if (phi.classes.class_of(i) != cls)
        continue;
      std::vector<std::uint32_t> images;
      for (Letter x : phi.words[i])
        images.push_back(x.index);
      return {PermutativityWitness{n, Perm::from_one_based(std::move(images))}, n_max};
    }
  }
  return {std::nullopt, n_max};
}

/// Least k <= k_max with var(sigma) ⊆ P_k.
inline std::optional<std::uint32_t> least_pk(Presentation const &sigma, std::uint32_t k_max, Caps const &caps = {})
{
  for (std::uint32_t k = 0; k <= k_max; ++k)
    if (derivable(sigma, pk_identity(k), caps))
      return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// identities x^n y^n z^n = y^n x^n z^n and x t x^{n-1} y^n z^n = y t y^{n-1} x^n z^n

namespace detail
{

inline Word cat(std::initializer_list<Word> parts)
{
  std::vector<Letter> letters;
  for (auto const &p : parts)
    letters.insert(letters.end(), p.begin(), p.end());
  return Word(std::move(letters));
}

inline Word cat_nonempty(std::vector<std::optional<Word>> const &parts)
{
  std::vector<Letter> letters;
  for (auto const &p : parts)
    if (p)
      letters.insert(letters.end(), p->begin(), p->end());
  return Word(std::move(letters));
}

} // namespace detail

/// x^n y^n z^n = y^n x^n z^n with x, y, z = x_1, x_2, x_3.
inline Identity lemma5_identity(std::uint32_t n)
{
  if (n == 0)
    throw Error(ErrorCode::PremiseNotMet, "n must be positive");
  Letter x(1), y(2), z(3);
  return {detail::cat({power(x, n), power(y, n), power(z, n)}),
          detail::cat({power(y, n), power(x, n), power(z, n)})};
}

/// x t x^{n-1} y^n z^n = y t y^{n-1} x^n z^n with x, y, z, t = x_1..x_4.
inline Identity lemma6_identity(std::uint32_t n)
{
  if (n == 0)
    throw Error(ErrorCode::PremiseNotMet, "n must be positive");
  Letter x(1), y(2), z(3), t(4);
  auto opt_power = [](Letter a, std::uint32_t k) -> std::optional<Word> {
    if (k == 0)
      return std::nullopt;
    return power(a, k);
  };
  return {detail::cat_nonempty({power(x, 1), power(t, 1), opt_power(x, n - 1), power(y, n), power(z, n)}),
          detail::cat_nonempty({power(y, 1), power(t, 1), opt_power(y, n - 1), power(x, n), power(z, n)})};
}

inline bool lemma5_witness(Presentation const &sigma, std::uint32_t n, Caps const &caps = {})
{ return derivable(sigma, lemma5_identity(n), caps); }

inline bool lemma6_witness(Presentation const &sigma, std::uint32_t n, Caps const &caps = {})
{ return derivable(sigma, lemma6_identity(n), caps); }

/// Least n <= n_max at which both identities and their mirror images hold.
inline std::optional<std::uint32_t> least_lemma_level(Presentation const &sigma, std::uint32_t n_max,
                                                      Caps const &caps = {})
{
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    auto five = lemma5_identity(n), six = lemma6_identity(n);
    if (derivable(sigma, five, caps) && derivable(sigma, six, caps) &&
        derivable(sigma, five.reversed(), caps) && derivable(sigma, six.reversed(), caps))
      return n;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// condition e)

enum class Verdict { True, False, Unknown };

inline std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::True: return "true";
  case Verdict::False: return "false";
  case Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct ConditionEReport
{
  PermutativityResult permutative;
  bool contains_lz = false;
  bool contains_rz = false;
  bool contains_x = false;
  bool contains_xdual = false;
  Verdict satisfies_e = Verdict::Unknown;

  /// Names of the containments that hold. They decide the verdict only once
  /// permutativity is established.
  std::vector<std::string> violations() const
  {
    std::vector<std::string> out;
    if (contains_lz)
      out.push_back("contains_lz");
    if (contains_rz)
      out.push_back("contains_rz");
    if (contains_x)
      out.push_back("contains_x");
    if (contains_xdual)
      out.push_back("contains_xdual");
    return out;
  }
};

/// Permutative and containing none of LZ, RZ, X, X-dual.
inline ConditionEReport check_condition_e(Presentation const &sigma, std::uint32_t n_max, Caps const &caps = {})
{
  if (!is_overcommutative(sigma))
    throw Error(ErrorCode::NotOvercommutative, "the presentation has an unbalanced identity");

  ConditionEReport report;
  report.contains_lz = contains_fixed(sigma, FixedVariety::lz());
  report.contains_rz = contains_fixed(sigma, FixedVariety::rz());
  report.contains_x = contains_fixed(sigma, FixedVariety::x());
  report.contains_xdual = contains_fixed(sigma, FixedVariety::x_dual());
  report.permutative = is_permutative(sigma, n_max, caps);

  // Permutativity is settled first: an exhausted search gives Unknown even
  // when a containment already holds.
  if (!report.permutative.permutative())
    report.satisfies_e = Verdict::Unknown;
  else if (!report.violations().empty())
    report.satisfies_e = Verdict::False;
  else
    report.satisfies_e = Verdict::True;
  return report;
}

// ---------------------------------------------------------------------------
// bounds

/// N = (4k(2n+k-1)+2)^{2k} and the cardinality bound 2^{N²}. The bound is
/// kept as its exponent; for k >= 2 it has trillions of bits.
struct BoundParams
{
  std::uint32_t k = 0;
  std::uint32_t n = 1;
  BigInt N;
  BigInt card_bound_exponent; // N²

  BigInt card_bound_bit_length() const
  { return card_bound_exponent + 1; }

  /// 2^{N²}; only for exponents that fit in memory.
  BigInt card_bound() const
  {
    if (card_bound_exponent > (BigInt(1) << 26))
      throw Error(ErrorCode::SizeCapExceeded, "2^(N^2) is too large to materialize");
    return BigInt(1) << static_cast<unsigned>(card_bound_exponent);
  }

  /// value <= 2^{N²}
  bool within_card_bound(BigInt const &value) const
  {
    if (value <= 0)
      return true;
    BigInt bits = msb(value) + 1;
    if (bits <= card_bound_exponent)
      return true;
    // value has exactly N²+1 bits: only 2^{N²} itself is allowed
    return bits == card_bound_exponent + 1 && lsb(value) == msb(value);
  }
};

inline BoundParams bound_params(std::uint32_t k, std::uint32_t n)
{
  if (n < 1)
    throw Error(ErrorCode::PremiseNotMet, "n must be at least 1");
  BoundParams p;
  p.k = k;
  p.n = n;
  BigInt base = BigInt(4) * k * (BigInt(2) * n + k - 1) + 2;
  p.N = boost::multiprecision::pow(base, 2 * k);
  p.card_bound_exponent = p.N * p.N;
  return p;
}

// ---------------------------------------------------------------------------
// L/M/R factorization and the normal-form argument

/// w = L M R with |L| = |R| = k; L and R are absent for k = 0.
struct LmrSplit
{
  std::optional<Word> left;
  Word middle;
  std::optional<Word> right;
};

inline LmrSplit lmr_split(Word const &w, std::uint32_t k)
{
  if (w.size() < 2 * std::size_t{k} + 1)
    throw Error(ErrorCode::WordTooShort,
                to_string(w) + " is shorter than 2k+1 = " + std::to_string(2 * k + 1));
  if (k == 0)
    return {std::nullopt, w, std::nullopt};
  return {w.factor(0, k), w.factor(k, w.size() - k), w.factor(w.size() - k, w.size())};
}

namespace detail
{

// The two letters of highest multiplicity, ties to the smaller index.
inline std::vector<Letter> top_two(Content const &c)
{
  std::vector<std::pair<std::uint32_t, Letter>> ranked;
  for (auto const &[x, m] : c)
    ranked.emplace_back(m, x);
  std::stable_sort(ranked.begin(), ranked.end(), [](auto const &a, auto const &b) { return a.first > b.first; });
  std::vector<Letter> out;
  for (std::size_t i = 0; i < ranked.size() && i < 2; ++i)
    out.push_back(ranked[i].second);
  return out;
}

inline std::vector<Letter> boundary_letters(Word const &w, std::uint32_t k)
{
  std::vector<Letter> out(w.begin(), w.begin() + k);
  out.insert(out.end(), w.end() - k, w.end());
  return out;
}

} // namespace detail

/// No letter in L(w) or R(w) has multiplicity >= n+2k unless it is one of
/// the two most frequent letters.
inline bool condition_i(Word const &w, std::uint32_t k, std::uint32_t n)
{
  if (w.size() < 2 * std::size_t{k} + 1)
    throw Error(ErrorCode::WordTooShort,
                to_string(w) + " is shorter than 2k+1 = " + std::to_string(2 * k + 1));
  auto c = content_of(w);
  auto exempt = detail::top_two(c);
  for (Letter x : detail::boundary_letters(w, k)) {
    if (std::find(exempt.begin(), exempt.end(), x) != exempt.end())
      continue;
    if (c.at(x) >= n + 2 * k)
      return false;
  }
  return true;
}

/// A word of the φ-class of w satisfying condition (i): w itself when it
/// does, otherwise the smallest such class member.
inline Word normalize_ends(PhiLambda const &phi, Word const &w, std::uint32_t k, std::uint32_t n)
{
  if (condition_i(w, k, n))
    return w;
  auto cls = phi.class_of(w);
  for (std::size_t i = 0; i < phi.words.size(); ++i)
    if (phi.classes.class_of(i) == cls && condition_i(phi.words[i], k, n))
      return phi.words[i];
  throw Error(ErrorCode::NoNormalFormFound, "no word equivalent to " + to_string(w) + " satisfies condition (i)");
}

inline Word normalize_ends(Presentation const &sigma, Word const &w, std::uint32_t k, std::uint32_t n,
                           Caps const &caps = {})
{
  if (condition_i(w, k, n))
    return w;
  return normalize_ends(phi_lambda(sigma, content_of(w), caps), w, k, n);
}

/// Counting behind the bound |A| <= N for one content class.
///
/// boundary_count counts the distinct (L, R) pairs among words satisfying
/// condition (i). restricted_boundary_count additionally applies condition
/// (ii): for every multiplicity i < n+2k carried by at least 4k letters
/// (the set I), boundary letters of multiplicity i must come from Y_i, the
/// 4k smallest such letters. a_count is the number of φ-classes meeting
/// those restricted words.
struct ClassBoundReport
{
  std::size_t class_count = 0;
  std::size_t boundary_count = 0;
  std::size_t restricted_boundary_count = 0;
  std::size_t a_count = 0;
  BigInt N;
};

inline ClassBoundReport verify_class_bound(PhiLambda const &phi, std::uint32_t k, std::uint32_t n)
{
  auto const &words = phi.words;
  auto const &content = words.content();
  if (total_size(content) <= 2 * k + 1)
    throw Error(ErrorCode::WordTooShort, "content must have more than 2k+1 letters");

  using Boundary = std::vector<Letter>;
  std::map<Boundary, std::uint32_t> class_of_boundary;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto [it, inserted] = class_of_boundary.emplace(detail::boundary_letters(words[i], k), phi.classes.class_of(i));
    if (!inserted && it->second != phi.classes.class_of(i))
      throw Error(ErrorCode::InvariantViolation,
                  "words with equal L and R lie in different classes, e.g. " + to_string(words[i]));
  }

  // Y_i for every i in I
  std::map<std::uint32_t, std::vector<Letter>> letters_of_multiplicity;
  for (auto const &[x, m] : content)
    letters_of_multiplicity[m].push_back(x);
  std::map<std::uint32_t, std::set<Letter>> y_sets;
  for (auto const &[m, letters] : letters_of_multiplicity)
    if (m < n + 2 * k && letters.size() >= 4 * std::size_t{k} && k > 0)
      y_sets[m] = std::set<Letter>(letters.begin(), letters.begin() + 4 * k);

  auto condition_ii = [&](Word const &w) {
    for (Letter x : detail::boundary_letters(w, k)) {
      auto it = y_sets.find(content.at(x));
      if (it != y_sets.end() && !it->second.contains(x))
        return false;
    }
    return true;
  };

  std::vector<bool> has_normal_form(phi.classes.class_count(), false);
  std::set<Boundary> boundaries, restricted;
  std::set<std::uint32_t> a_classes;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!condition_i(words[i], k, n))
      continue;
    has_normal_form[phi.classes.class_of(i)] = true;
    auto b = detail::boundary_letters(words[i], k);
    boundaries.insert(b);
    if (condition_ii(words[i])) {
      restricted.insert(b);
      a_classes.insert(phi.classes.class_of(i));
    }
  }

  for (std::size_t c = 0; c < has_normal_form.size(); ++c)
    if (!has_normal_form[c])
      throw Error(ErrorCode::NoNormalFormFound, "a class has no word satisfying condition (i)");

  ClassBoundReport report;
  report.class_count = phi.classes.class_count();
  report.boundary_count = boundaries.size();
  report.restricted_boundary_count = restricted.size();
  report.a_count = a_classes.size();
  report.N = bound_params(k, n).N;

  if (report.class_count > report.boundary_count)
    throw Error(ErrorCode::InvariantViolation, "more classes than condition-(i) boundaries");
  if (report.a_count > report.restricted_boundary_count || BigInt(report.restricted_boundary_count) > report.N)
    throw Error(ErrorCode::InvariantViolation, "restricted boundary count exceeds N");
  return report;
}

/// Checks var(sigma) ⊆ P_k first; the boundary property depends on it.
inline ClassBoundReport verify_class_bound(Presentation const &sigma, Content const &c, std::uint32_t k,
                                           std::uint32_t n, Caps const &caps = {})
{
  if (total_size(c) <= 2 * k + 1)
    throw Error(ErrorCode::WordTooShort, "content must have more than 2k+1 letters");
  if (!derivable(sigma, pk_identity(k), caps))
    throw Error(ErrorCode::PremiseNotMet, "the variety is not contained in P" + std::to_string(k));
  return verify_class_bound(phi_lambda(sigma, c, caps), k, n);
}

} // namespace oclattice

#endif // OCLATTICE_THEOREMCHECK_HPP
