#ifndef OCLATTICE_TEST_HELPERS_HPP
#define OCLATTICE_TEST_HELPERS_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <oclattice/oclattice.hpp>

namespace testing_helpers
{

using namespace oclattice;

inline Word W(std::string const &s) { return parse_word(s); }

inline Presentation P(std::vector<std::string> const &lines)
{
  std::string text;
  for (auto const &l : lines)
    text += l + "\n";
  return parse_presentation(text);
}

inline Presentation remark() { return P({"xxy = yxx", "xyz = xzy"}); }
inline Presentation sigma_x() { return P({"xyzt = xytz", "xxyy = yyxx", "yyxx = xyxy"}); }

/// All words over letters 1..letters of length 1..max_len.
inline std::vector<Word> all_words(std::uint32_t letters, std::size_t max_len)
{
  std::vector<Word> out;
  std::vector<Letter> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty())
      out.emplace_back(cur);
    if (cur.size() == max_len)
      return;
    for (std::uint32_t x = 1; x <= letters; ++x) {
      cur.emplace_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

/// Every content over letters 1..letters (multiplicity 0 allowed, nonempty)
/// with total at most max_total.
inline std::vector<Content> all_contents(std::uint32_t letters, std::uint32_t max_total)
{
  std::vector<Content> out;
  std::vector<std::uint32_t> m(letters, 0);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t i, std::uint32_t left) {
    if (i == letters) {
      Content c;
      for (std::uint32_t j = 0; j < letters; ++j)
        if (m[j])
          c[Letter(j + 1)] = m[j];
      if (!c.empty())
        out.push_back(c);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      m[i] = k;
      rec(i + 1, left - k);
    }
    m[i] = 0;
  };
  rec(0, max_total);
  return out;
}

/// Random balanced identity over letters 1..letters with both sides of
/// length at most max_len.
inline Identity random_balanced_identity(std::mt19937 &rng, std::uint32_t letters, std::size_t max_len)
{
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::uint32_t> letter(1, letters);
  std::vector<Letter> lhs(len(rng));
  for (auto &x : lhs)
    x = Letter(letter(rng));
  auto rhs = lhs;
  std::shuffle(rhs.begin(), rhs.end(), rng);
  return {Word(lhs), Word(rhs)};
}

} // namespace testing_helpers

#endif
