#ifndef OCLATTICE_REPORTS_HPP
#define OCLATTICE_REPORTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace oclattice::reports
{

using nlohmann::json;

namespace detail
{

template<typename T>
void put(json &j, char const *key, std::optional<T> const &value)
{
  if (value)
    j[key] = *value;
  else
    j[key] = nullptr;
}

template<typename T>
void get(json const &j, char const *key, std::optional<T> &value)
{
  auto const &v = j.at(key);
  if (v.is_null())
    value.reset();
  else
    value = v.get<T>();
}

} // namespace detail

struct WordsReport
{
  std::string content;
  std::vector<std::string> words;
  std::size_t count = 0;

  friend bool operator==(WordsReport const &, WordsReport const &) = default;
};

inline void to_json(json &j, WordsReport const &r)
{ j = {{"content", r.content}, {"words", r.words}, {"count", r.count}}; }

inline void from_json(json const &j, WordsReport &r)
{
  j.at("content").get_to(r.content);
  j.at("words").get_to(r.words);
  j.at("count").get_to(r.count);
}

struct PhiReport
{
  std::string content;
  std::vector<std::vector<std::string>> classes;
  std::size_t class_count = 0;

  friend bool operator==(PhiReport const &, PhiReport const &) = default;
};

inline void to_json(json &j, PhiReport const &r)
{ j = {{"content", r.content}, {"classes", r.classes}, {"class_count", r.class_count}}; }

inline void from_json(json const &j, PhiReport &r)
{
  j.at("content").get_to(r.content);
  j.at("classes").get_to(r.classes);
  j.at("class_count").get_to(r.class_count);
}

struct ConReport
{
  std::string partition;
  std::size_t quotient_size = 0;
  std::uint64_t group_order = 0;
  bool regular = false;
  std::size_t congruence_count = 0;
  std::optional<bool> modular;      // null when the lattice is too large to test
  std::optional<bool> distributive;

  friend bool operator==(ConReport const &, ConReport const &) = default;
};

inline void to_json(json &j, ConReport const &r)
{
  j = {{"partition", r.partition},
       {"quotient_size", r.quotient_size},
       {"group_order", r.group_order},
       {"regular", r.regular},
       {"congruence_count", r.congruence_count}};
  detail::put(j, "modular", r.modular);
  detail::put(j, "distributive", r.distributive);
}

inline void from_json(json const &j, ConReport &r)
{
  j.at("partition").get_to(r.partition);
  j.at("quotient_size").get_to(r.quotient_size);
  j.at("group_order").get_to(r.group_order);
  j.at("regular").get_to(r.regular);
  j.at("congruence_count").get_to(r.congruence_count);
  detail::get(j, "modular", r.modular);
  detail::get(j, "distributive", r.distributive);
}

struct CheckReport
{
  std::string satisfies_e; // "true", "false" or "unknown"
  bool permutative = false;
  std::uint32_t n_max = 0;
  std::optional<std::uint32_t> witness_length;
  std::optional<std::vector<std::uint32_t>> witness_permutation; // 1-based images
  bool contains_lz = false;
  bool contains_rz = false;
  bool contains_x = false;
  bool contains_xdual = false;
  std::vector<std::string> violations;
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> n;
  std::optional<std::string> N;                 // decimal
  std::optional<std::string> card_bound_bits;   // decimal bit length of 2^(N^2)
  std::string conclusion;

  friend bool operator==(CheckReport const &, CheckReport const &) = default;
};

inline void to_json(json &j, CheckReport const &r)
{
  j = {{"satisfies_e", r.satisfies_e},
       {"permutative", r.permutative},
       {"n_max", r.n_max},
       {"contains_lz", r.contains_lz},
       {"contains_rz", r.contains_rz},
       {"contains_x", r.contains_x},
       {"contains_xdual", r.contains_xdual},
       {"violations", r.violations},
       {"conclusion", r.conclusion}};
  detail::put(j, "witness_length", r.witness_length);
  detail::put(j, "witness_permutation", r.witness_permutation);
  detail::put(j, "k", r.k);
  detail::put(j, "n", r.n);
  detail::put(j, "N", r.N);
  detail::put(j, "card_bound_bits", r.card_bound_bits);
}

inline void from_json(json const &j, CheckReport &r)
{
  j.at("satisfies_e").get_to(r.satisfies_e);
  j.at("permutative").get_to(r.permutative);
  j.at("n_max").get_to(r.n_max);
  j.at("contains_lz").get_to(r.contains_lz);
  j.at("contains_rz").get_to(r.contains_rz);
  j.at("contains_x").get_to(r.contains_x);
  j.at("contains_xdual").get_to(r.contains_xdual);
  j.at("violations").get_to(r.violations);
  j.at("conclusion").get_to(r.conclusion);
  detail::get(j, "witness_length", r.witness_length);
  detail::get(j, "witness_permutation", r.witness_permutation);
  detail::get(j, "k", r.k);
  detail::get(j, "n", r.n);
  detail::get(j, "N", r.N);
  detail::get(j, "card_bound_bits", r.card_bound_bits);
}

struct DeriveReport
{
  std::string identity;
  bool derivable = false;

  friend bool operator==(DeriveReport const &, DeriveReport const &) = default;
};

inline void to_json(json &j, DeriveReport const &r)
{ j = {{"identity", r.identity}, {"derivable", r.derivable}}; }

inline void from_json(json const &j, DeriveReport &r)
{
  j.at("identity").get_to(r.identity);
  j.at("derivable").get_to(r.derivable);
}

} // namespace oclattice::reports

#endif // OCLATTICE_REPORTS_HPP
