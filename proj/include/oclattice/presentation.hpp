#ifndef OCLATTICE_PRESENTATION_HPP
#define OCLATTICE_PRESENTATION_HPP

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace oclattice
{

struct Identity
{
  Word lhs;
  Word rhs;

  bool balanced() const { return is_balanced(lhs, rhs); }
  Identity reversed() const { return {reverse(lhs), reverse(rhs)}; }

  friend bool operator==(Identity const &, Identity const &) = default;
  friend auto operator<=>(Identity const &a, Identity const &b)
  {
    if (auto c = a.lhs <=> b.lhs; c != 0)
      return c;
    return a.rhs <=> b.rhs;
  }
};

inline std::string to_string(Identity const &id)
{ return to_string(id.lhs) + " = " + to_string(id.rhs); }

/// Parses "<word> = <word>".
inline Identity parse_identity(std::string_view text)
{
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw Error(ErrorCode::ParseError, "expected '<word> = <word>', got '" + std::string(text) + "'");
  return {parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1))};
}

/// Finite identity system Σ; the empty system presents all semigroups.
class Presentation
{
public:
  Presentation() = default;

  explicit Presentation(std::vector<Identity> identities, std::optional<std::string> name = std::nullopt)
  : _identities(std::move(identities)), _name(std::move(name))
  {}

  Presentation(std::initializer_list<Identity> identities)
  : _identities(identities)
  {}

  std::vector<Identity> const &identities() const noexcept { return _identities; }
  std::optional<std::string> const &name() const noexcept { return _name; }
  bool empty() const noexcept { return _identities.empty(); }
  std::size_t size() const noexcept { return _identities.size(); }

  auto begin() const noexcept { return _identities.begin(); }
  auto end() const noexcept { return _identities.end(); }

  bool balanced() const
  {
    return std::all_of(_identities.begin(), _identities.end(),
                       [](Identity const &id) { return id.balanced(); });
  }

  /// Throws UnbalancedIdentity naming the first offender.
  void require_balanced() const
  {
    for (auto const &id : _identities)
      if (!id.balanced())
        throw Error(ErrorCode::UnbalancedIdentity, to_string(id) + " is not balanced");
  }

  Presentation reversed() const
  {
    std::vector<Identity> out;
    out.reserve(_identities.size());
    for (auto const &id : _identities)
      out.push_back(id.reversed());
    return Presentation(std::move(out), _name);
  }

  /// Union as sets of identities, in first-seen order.
  friend Presentation operator+(Presentation const &a, Presentation const &b)
  {
    std::vector<Identity> out = a._identities;
    for (auto const &id : b._identities)
      if (std::find(out.begin(), out.end(), id) == out.end())
        out.push_back(id);
    return Presentation(std::move(out));
  }

  /// Stable text key, used for caching.
  std::string key() const
  {
    std::string out;
    for (auto const &id : _identities)
      out += to_string(id) + ";";
    return out;
  }

private:
  std::vector<Identity> _identities;
  std::optional<std::string> _name;
};

/// One identity per line; blank lines and '#' comments are skipped.
inline Presentation parse_presentation(std::istream &in, std::optional<std::string> name = std::nullopt)
{
  std::vector<Identity> identities;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto text = detail::trim(line);
    if (text.empty() || text.front() == '#')
      continue;
    try {
      identities.push_back(parse_identity(text));
    } catch (Error const &e) {
      throw Error(e.code() == ErrorCode::EmptyWord ? ErrorCode::ParseError : e.code(),
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return Presentation(std::move(identities), std::move(name));
}

inline Presentation parse_presentation(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return parse_presentation(in);
}

inline Presentation load_presentation(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open presentation file '" + path + "'");
  return parse_presentation(in, path);
}

} // namespace oclattice

#endif // OCLATTICE_PRESENTATION_HPP
