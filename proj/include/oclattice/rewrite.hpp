#ifndef OCLATTICE_REWRITE_HPP
#define OCLATTICE_REWRITE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equivalence.hpp"
#include "presentation.hpp"
#include "words.hpp"

namespace oclattice
{

inline constexpr std::size_t kMaxPatternLength = 16;

/// target[start, end) is σ(pattern) for the recorded substitution σ.
struct Match
{
  std::size_t start = 0;
  std::size_t end = 0;
  std::map<Letter, Word> substitution;
};

namespace detail
{

// Backtracking matcher over cut points. For each distinct pattern letter
// the binding is stored as a (first, length) window into the target, so a
// repeated letter is checked by comparing two windows of the target.
class Matcher
{
public:
  Matcher(std::span<Letter const> pattern, std::span<Letter const> target)
  : _target(target)
  {
    _slots.reserve(pattern.size());
    for (Letter x : pattern) {
      auto it = std::find(_letters.begin(), _letters.end(), x);
      if (it == _letters.end()) {
        _slots.push_back(_letters.size());
        _letters.push_back(x);
      } else {
        _slots.push_back(static_cast<std::size_t>(it - _letters.begin()));
      }
    }
    _bindings.assign(_letters.size(), {0, 0});
  }

  std::vector<Letter> const &letters() const noexcept { return _letters; }

  // Calls visit(start, end, bindings) for every match; bindings[i] is the
  // (first, length) window bound to letters()[i].
  template<typename Visit>
  void for_each(Visit &&visit)
  {
    for (std::size_t start = 0; start + _slots.size() <= _target.size(); ++start)
      extend(0, start, start, visit);
  }

private:
  template<typename Visit>
  void extend(std::size_t p, std::size_t t, std::size_t start, Visit &visit)
  {
    if (p == _slots.size()) {
      visit(start, t, std::span<std::pair<std::size_t, std::size_t> const>(_bindings));
      return;
    }

    std::size_t remaining = _slots.size() - p - 1;
    auto slot = _slots[p];
    auto &[first, length] = _bindings[slot];

    if (length != 0) {
      if (t + length > _target.size())
        return;
      for (std::size_t i = 0; i < length; ++i)
        if (_target[first + i] != _target[t + i])
          return;
      extend(p + 1, t + length, start, visit);
      return;
    }

    for (std::size_t len = 1; t + len + remaining <= _target.size(); ++len) {
      first = t;
      length = len;
      extend(p + 1, t + len, start, visit);
    }
    length = 0;
  }

  std::span<Letter const> _target;
  std::vector<Letter> _letters;
  std::vector<std::size_t> _slots;
  std::vector<std::pair<std::size_t, std::size_t>> _bindings;
};

// Writes target[0, start) σ(replacement) target[end, n) into out.
inline void splice(std::span<Letter const> target, std::size_t start, std::size_t end,
                   std::span<Letter const> replacement, std::vector<Letter> const &pattern_letters,
                   std::span<std::pair<std::size_t, std::size_t> const> bindings,
                   std::vector<Letter> &out)
{
  out.assign(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(start));
  for (Letter x : replacement) {
    auto slot = static_cast<std::size_t>(
      std::find(pattern_letters.begin(), pattern_letters.end(), x) - pattern_letters.begin());
    auto [first, length] = bindings[slot];
    out.insert(out.end(), target.begin() + static_cast<std::ptrdiff_t>(first),
               target.begin() + static_cast<std::ptrdiff_t>(first + length));
  }
  out.insert(out.end(), target.begin() + static_cast<std::ptrdiff_t>(end), target.end());
}

} // namespace detail

/// All factorizations target = a σ(pattern) b, ordered by start index and
/// then by cut points.
inline std::vector<Match> match_pattern(Word const &pattern, Word const &target)
{
  if (pattern.size() > target.size())
    throw Error(ErrorCode::PatternTooLong, to_string(pattern) + " is longer than " + to_string(target));
  if (pattern.size() > kMaxPatternLength)
    throw Error(ErrorCode::PatternTooLong, "patterns are limited to " + std::to_string(kMaxPatternLength) + " letters");

  std::vector<Match> out;
  detail::Matcher matcher(pattern.letters(), target.letters());
  auto const &letters = matcher.letters();
  matcher.for_each([&](std::size_t start, std::size_t end, auto bindings) {
    Match m{start, end, {}};
    for (std::size_t i = 0; i < letters.size(); ++i)
      m.substitution.emplace(letters[i], target.factor(bindings[i].first, bindings[i].first + bindings[i].second));
    out.push_back(std::move(m));
  });
  return out;
}

/// Words other than w reachable by applying one identity of sigma, in either
/// direction, at one position.
inline std::set<Word> rewrite_neighbors(Word const &w, Presentation const &sigma)
{
  sigma.require_balanced();

  std::set<Word> out;
  std::vector<Letter> buffer;
  for (auto const &id : sigma) {
    for (int dir = 0; dir < 2; ++dir) {
      Word const &from = dir == 0 ? id.lhs : id.rhs;
      Word const &to = dir == 0 ? id.rhs : id.lhs;
      if (from.size() > w.size())
        continue;
      detail::Matcher matcher(from.letters(), w.letters());
      matcher.for_each([&](std::size_t start, std::size_t end, auto bindings) {
        detail::splice(w.letters(), start, end, to.letters(), matcher.letters(), bindings, buffer);
        if (!std::equal(buffer.begin(), buffer.end(), w.begin(), w.end()))
          out.emplace(buffer);
      });
    }
  }
  return out;
}

/// φ_λ of a presentation: the word class of one content together with the
/// restriction of the fully invariant congruence to it.
struct PhiLambda
{
  WordClass words;
  FiniteEquivalence classes;

  std::size_t class_of(Word const &w) const
  {
    auto i = words.index_of(w);
    if (!i)
      throw Error(ErrorCode::InvariantViolation, to_string(w) + " is not in the class of " + to_string(words.content()));
    return classes.class_of(*i);
  }

  /// Members of each class as words; classes ordered by smallest member.
  std::vector<std::vector<Word>> class_members() const
  {
    std::vector<std::vector<Word>> out;
    for (auto const &members : classes.classes()) {
      auto &row = out.emplace_back();
      for (auto i : members)
        row.push_back(words[i]);
    }
    return out;
  }
};

/// Connected components of the one-step rewrite graph on W(c). Balanced
/// rewriting preserves content, so every derivation between two words of
/// W(c) stays inside W(c) and the components are exactly the restriction of
/// the fully invariant congruence.
inline PhiLambda phi_lambda(Presentation const &sigma, Content const &c, Caps const &caps = {})
{
  sigma.require_balanced();
  WordClass words(c, caps);
  UnionFind uf(words.size());

  // Undirected components: applying each identity left-to-right from every
  // word already produces every edge.
  std::vector<Letter> buffer;
  for (auto const &id : sigma) {
    if (id.lhs == id.rhs || id.lhs.size() > total_size(c))
      continue;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto target = words[i].letters();
      detail::Matcher matcher(id.lhs.letters(), target);
      matcher.for_each([&](std::size_t start, std::size_t end, auto bindings) {
        detail::splice(target, start, end, id.rhs.letters(), matcher.letters(), bindings, buffer);
        auto j = words.index_of(std::span<Letter const>(buffer));
        if (!j)
          throw Error(ErrorCode::InvariantViolation, "rewrite left the content class");
        uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
      });
    }
  }

  auto classes = FiniteEquivalence::from_union_find(uf);
  return {std::move(words), std::move(classes)};
}

/// Whether u = v holds in var(sigma). Unbalanced pairs never follow from a
/// balanced system.
inline bool derivable(Presentation const &sigma, Word const &u, Word const &v, Caps const &caps = {})
{
  sigma.require_balanced();
  if (!is_balanced(u, v))
    return false;
  if (u == v)
    return true;
  auto phi = phi_lambda(sigma, content_of(u), caps);
  return phi.class_of(u) == phi.class_of(v);
}

inline bool derivable(Presentation const &sigma, Identity const &id, Caps const &caps = {})
{ return derivable(sigma, id.lhs, id.rhs, caps); }

/// Process-wide memo of φ_λ results keyed by (presentation, content).
/// Lookups take a shared lock; concurrent readers never block each other.
class PhiCache
{
public:
  std::shared_ptr<PhiLambda const> get(Presentation const &sigma, Content const &c, Caps const &caps = {})
  {
    auto key = std::make_pair(sigma.key(), to_string(c));
    {
      std::shared_lock lock(_mutex);
      if (auto it = _entries.find(key); it != _entries.end())
        return it->second;
    }
    auto value = std::make_shared<PhiLambda const>(phi_lambda(sigma, c, caps));
    std::unique_lock lock(_mutex);
    auto [it, inserted] = _entries.emplace(std::move(key), std::move(value));
    return it->second;
  }

  std::size_t size() const
  {
    std::shared_lock lock(_mutex);
    return _entries.size();
  }

  void clear()
  {
    std::unique_lock lock(_mutex);
    _entries.clear();
  }

private:
  mutable std::shared_mutex _mutex;
  std::map<std::pair<std::string, std::string>, std::shared_ptr<PhiLambda const>> _entries;
};

} // namespace oclattice

#endif // OCLATTICE_REWRITE_HPP
