#ifndef OCLATTICE_WORDS_HPP
#define OCLATTICE_WORDS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace oclattice
{

/// A letter x_i of the countable alphabet, identified by its 1-based index.
/// Indices 1..26 print as a..z, larger ones as x27, x28, ...
struct Letter
{
  std::uint32_t index = 1;

  constexpr Letter() = default;
  constexpr explicit Letter(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

inline std::string to_string(Letter x)
{
  if (x.index >= 1 && x.index <= 26)
    return std::string(1, static_cast<char>('a' + x.index - 1));
  return "x" + std::to_string(x.index);
}

/// Nonempty sequence of letters, i.e. an element of the free semigroup.
class Word
{
public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word(std::vector<Letter> letters)
  : _letters(std::move(letters))
  {
    if (_letters.empty())
      throw Error(ErrorCode::EmptyWord, "a word needs at least one letter");
  }

  Word(std::initializer_list<Letter> letters)
  : Word(std::vector<Letter>(letters))
  {}

  std::size_t size() const noexcept { return _letters.size(); }
  Letter operator[](std::size_t i) const { return _letters[i]; }
  Letter front() const { return _letters.front(); }
  Letter back() const { return _letters.back(); }

  const_iterator begin() const noexcept { return _letters.begin(); }
  const_iterator end() const noexcept { return _letters.end(); }

  std::span<Letter const> letters() const noexcept { return _letters; }

  /// Factor [first, last); throws EmptyWord when the range is empty.
  Word factor(std::size_t first, std::size_t last) const
  {
    return Word(std::vector<Letter>(_letters.begin() + static_cast<std::ptrdiff_t>(first),
                                    _letters.begin() + static_cast<std::ptrdiff_t>(last)));
  }

  friend bool operator==(Word const &, Word const &) = default;
  friend auto operator<=>(Word const &lhs, Word const &rhs)
  { return lhs._letters <=> rhs._letters; }

private:
  std::vector<Letter> _letters;
};

inline std::string to_string(Word const &w)
{
  std::string out;
  for (Letter x : w)
    out += to_string(x);
  return out;
}

struct WordHash
{
  std::size_t operator()(Word const &w) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w) {
      h ^= x.index;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Letter multiplicities of a word; every stored count is positive.
using Content = std::map<Letter, std::uint32_t>;

/// Non-increasing sequence of positive integers.
class Partition
{
public:
  explicit Partition(std::vector<std::uint32_t> components)
  : _components(std::move(components))
  {
    if (_components.empty())
      throw Error(ErrorCode::ParseError, "a partition needs at least one component");
    for (std::size_t i = 0; i < _components.size(); ++i) {
      if (_components[i] == 0)
        throw Error(ErrorCode::ParseError, "partition components must be positive");
      if (i > 0 && _components[i] > _components[i - 1])
        throw Error(ErrorCode::ParseError, "partition components must be non-increasing");
    }
  }

  std::size_t parts() const noexcept { return _components.size(); }
  std::uint32_t operator[](std::size_t i) const { return _components[i]; }
  std::vector<std::uint32_t> const &components() const noexcept { return _components; }

  std::uint32_t total() const
  {
    std::uint32_t sum = 0;
    for (auto c : _components)
      sum += c;
    return sum;
  }

  /// The content x_1^{λ_1} ... x_m^{λ_m} whose word class is W_λ.
  Content canonical_content() const
  {
    Content c;
    for (std::size_t i = 0; i < _components.size(); ++i)
      c[Letter(static_cast<std::uint32_t>(i + 1))] = _components[i];
    return c;
  }

  friend bool operator==(Partition const &, Partition const &) = default;

private:
  std::vector<std::uint32_t> _components;
};

inline std::string to_string(Partition const &p)
{
  std::string out;
  for (std::size_t i = 0; i < p.parts(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Limits that keep enumerations at desk scale.
struct Caps
{
  std::size_t max_letters = 12;
  std::size_t max_words = 1'000'000;
  std::size_t max_congruences = 100'000;
};

// ---------------------------------------------------------------------------
// parsing

namespace detail
{

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

// Reads one letter token starting at pos, advancing pos past it.
inline Letter read_letter(std::string_view text, std::size_t &pos)
{
  char c = text[pos];
  if (c < 'a' || c > 'z')
    throw Error(ErrorCode::UnknownSymbol, "unexpected symbol '" + std::string(1, c) + "'");

  if (c == 'x' && pos + 1 < text.size() && is_digit(text[pos + 1])) {
    std::size_t end = pos + 1;
    std::uint64_t value = 0;
    while (end < text.size() && is_digit(text[end])) {
      value = value * 10 + static_cast<std::uint64_t>(text[end] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorCode::UnknownSymbol, "letter index out of range");
      ++end;
    }
    if (value == 0)
      throw Error(ErrorCode::UnknownSymbol, "letter index must be at least 1");
    pos = end;
    return Letter(static_cast<std::uint32_t>(value));
  }

  ++pos;
  return Letter(static_cast<std::uint32_t>(c - 'a' + 1));
}

} // namespace detail

inline Word parse_word(std::string_view text)
{
  text = detail::trim(text);
  if (text.empty())
    throw Error(ErrorCode::EmptyWord, "empty word");

  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size())
    letters.push_back(detail::read_letter(text, pos));
  return Word(std::move(letters));
}

inline Letter parse_letter(std::string_view text)
{
  text = detail::trim(text);
  if (text.empty())
    throw Error(ErrorCode::ParseError, "empty letter");
  std::size_t pos = 0;
  Letter x = detail::read_letter(text, pos);
  if (pos != text.size())
    throw Error(ErrorCode::ParseError, "expected a single letter, got '" + std::string(text) + "'");
  return x;
}

/// Parses "x:2,y:1".
inline Content parse_content(std::string_view text)
{
  text = detail::trim(text);
  if (text.empty())
    throw Error(ErrorCode::ParseError, "empty content");

  Content c;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = detail::trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "expected letter:count in '" + std::string(item) + "'");

    Letter x = parse_letter(item.substr(0, colon));
    auto count_text = detail::trim(item.substr(colon + 1));
    if (count_text.empty() || !std::all_of(count_text.begin(), count_text.end(), detail::is_digit))
      throw Error(ErrorCode::ParseError, "bad count in '" + std::string(item) + "'");
    std::uint64_t count = 0;
    for (char d : count_text) {
      count = count * 10 + static_cast<std::uint64_t>(d - '0');
      if (count > 1'000'000)
        throw Error(ErrorCode::ParseError, "count too large in '" + std::string(item) + "'");
    }
    if (count == 0)
      throw Error(ErrorCode::ParseError, "counts must be positive");
    if (c.contains(x))
      throw Error(ErrorCode::ParseError, "letter " + to_string(x) + " listed twice");
    c[x] = static_cast<std::uint32_t>(count);
  }
  return c;
}

inline std::string to_string(Content const &c)
{
  std::string out;
  for (auto const &[x, count] : c) {
    if (!out.empty())
      out += ',';
    out += to_string(x) + ":" + std::to_string(count);
  }
  return out;
}

/// Parses "3,2,1".
inline Partition parse_partition(std::string_view text)
{
  text = detail::trim(text);
  if (text.empty())
    throw Error(ErrorCode::ParseError, "empty partition");

  std::vector<std::uint32_t> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = detail::trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty() || !std::all_of(item.begin(), item.end(), detail::is_digit) || item.size() > 6)
      throw Error(ErrorCode::ParseError, "bad partition component '" + std::string(item) + "'");
    std::uint32_t value = 0;
    for (char d : item)
      value = value * 10 + static_cast<std::uint32_t>(d - '0');
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// basic word functions

inline Content content_of(Word const &w)
{
  Content c;
  for (Letter x : w)
    ++c[x];
  return c;
}

inline bool is_balanced(Word const &u, Word const &v)
{
  return u.size() == v.size() && content_of(u) == content_of(v);
}

inline std::uint32_t total_size(Content const &c)
{
  std::uint32_t total = 0;
  for (auto const &[x, count] : c)
    total += count;
  return total;
}

inline Partition partition_of(Content const &c)
{
  if (c.empty())
    throw Error(ErrorCode::EmptyWord, "empty content has no partition");
  std::vector<std::uint32_t> parts;
  for (auto const &[x, count] : c)
    parts.push_back(count);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

inline Word reverse(Word const &w)
{
  std::vector<Letter> letters(w.begin(), w.end());
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

inline std::uint32_t multiplicity(Letter x, Word const &w)
{
  return static_cast<std::uint32_t>(std::count(w.begin(), w.end(), x));
}

inline bool is_simple(Letter x, Word const &w)
{
  auto m = multiplicity(x, w);
  if (m == 0)
    throw Error(ErrorCode::LetterAbsent, to_string(x) + " does not occur in " + to_string(w));
  return m == 1;
}

inline Word concat(Word const &a, Word const &b)
{
  std::vector<Letter> letters(a.begin(), a.end());
  letters.insert(letters.end(), b.begin(), b.end());
  return Word(std::move(letters));
}

/// x^k for k >= 1.
inline Word power(Letter x, std::uint32_t k)
{
  return Word(std::vector<Letter>(k, x));
}

/// Multinomial coefficient of the content; nullopt when it overflows 64 bits.
inline std::optional<std::uint64_t> multinomial(Content const &c)
{
  unsigned __int128 result = 1;
  std::uint64_t placed = 0;
  for (auto const &[x, count] : c) {
    // result *= C(placed + count, count), built up one factor at a time
    for (std::uint32_t i = 1; i <= count; ++i) {
      result = result * (placed + i) / i;
      if (result > std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    }
    placed += count;
  }
  return static_cast<std::uint64_t>(result);
}

// ---------------------------------------------------------------------------
// word classes

/// All words of a fixed content, in lexicographic order of letter indices.
class WordClass
{
public:
  WordClass(Content content, Caps const &caps = {})
  : _content(std::move(content))
  {
    if (_content.empty())
      throw Error(ErrorCode::EmptyWord, "empty content");
    for (auto const &[x, count] : _content)
      if (count == 0)
        throw Error(ErrorCode::ParseError, "content multiplicities must be positive");

    auto total = total_size(_content);
    if (total > caps.max_letters)
      throw Error(ErrorCode::SizeCapExceeded,
                  "content has " + std::to_string(total) + " letters, cap is " + std::to_string(caps.max_letters));
    auto count = multinomial(_content);
    if (!count || *count > caps.max_words)
      throw Error(ErrorCode::SizeCapExceeded,
                  "word class of " + to_string(_content) + " exceeds " + std::to_string(caps.max_words) + " words");

    std::vector<Letter> letters;
    for (auto const &[x, m] : _content)
      letters.insert(letters.end(), m, x);

    _words.reserve(*count);
    do {
      _words.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
  }

  Content const &content() const noexcept { return _content; }
  std::size_t size() const noexcept { return _words.size(); }
  Word const &operator[](std::size_t i) const { return _words[i]; }
  std::vector<Word> const &words() const noexcept { return _words; }

  auto begin() const noexcept { return _words.begin(); }
  auto end() const noexcept { return _words.end(); }

  /// Position of w, or nullopt when w has a different content.
  std::optional<std::size_t> index_of(Word const &w) const
  { return index_of(w.letters()); }

  std::optional<std::size_t> index_of(std::span<Letter const> letters) const
  {
    auto less = [](Word const &a, std::span<Letter const> b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    auto it = std::lower_bound(_words.begin(), _words.end(), letters, less);
    if (it == _words.end() || !std::equal(it->begin(), it->end(), letters.begin(), letters.end()))
      return std::nullopt;
    return static_cast<std::size_t>(it - _words.begin());
  }

private:
  Content _content;
  std::vector<Word> _words;
};

inline WordClass enumerate_words(Content const &c, Caps const &caps = {})
{
  return WordClass(c, caps);
}

} // namespace oclattice

template<>
struct std::hash<oclattice::Word> : oclattice::WordHash
{};

#endif // OCLATTICE_WORDS_HPP
