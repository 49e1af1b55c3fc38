#ifndef OCLATTICE_CLI_HPP
#define OCLATTICE_CLI_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deciders.hpp"
#include "error.hpp"
#include "gsets.hpp"
#include "lattices.hpp"
#include "presentation.hpp"
#include "reports.hpp"
#include "rewrite.hpp"
#include "theoremcheck.hpp"
#include "words.hpp"

namespace oclattice::cli
{

enum ExitCode : int
{
  Ok = 0,
  False = 1,
  Parse = 2,
  SizeCap = 3,
  InvalidInput = 4,
  LatticeCap = 5,
  Unknown = 6,
  Internal = 70
};

inline int exit_code_for(ErrorCode code)
{
  switch (code) {
  case ErrorCode::EmptyWord:
  case ErrorCode::UnknownSymbol:
  case ErrorCode::ParseError:
    return Parse;
  case ErrorCode::SizeCapExceeded:
  case ErrorCode::DegreeCapExceeded:
  case ErrorCode::AssignmentCapExceeded:
  case ErrorCode::PatternTooLong:
    return SizeCap;
  case ErrorCode::UnbalancedIdentity:
  case ErrorCode::NotOvercommutative:
  case ErrorCode::DegreeMismatch:
  case ErrorCode::LetterAbsent:
  case ErrorCode::WordTooShort:
  case ErrorCode::PremiseNotMet:
    return InvalidInput;
  case ErrorCode::LatticeCapExceeded:
    return LatticeCap;
  case ErrorCode::NoNormalFormFound:
  case ErrorCode::InvariantViolation:
    return Internal;
  }
  return Internal;
}

/// Largest identity level tried when locating n for the bound.
inline constexpr std::uint32_t kMaxLemmaLevel = 3;

// ---------------------------------------------------------------------------
// report builders

inline reports::WordsReport words_report(Content const &c, Caps const &caps)
{
  auto words = enumerate_words(c, caps);
  reports::WordsReport r;
  r.content = to_string(c);
  for (auto const &w : words)
    r.words.push_back(to_string(w));
  r.count = words.size();
  return r;
}

inline reports::PhiReport phi_report(Presentation const &sigma, Content const &c, Caps const &caps)
{
  auto phi = phi_lambda(sigma, c, caps);
  reports::PhiReport r;
  r.content = to_string(c);
  for (auto const &members : phi.class_members()) {
    auto &row = r.classes.emplace_back();
    for (auto const &w : members)
      row.push_back(to_string(w));
  }
  r.class_count = phi.classes.class_count();
  return r;
}

struct ConResult
{
  reports::ConReport report;
  std::optional<FiniteLattice> lattice; // absent when too large to tabulate
};

inline ConResult con_report(Presentation const &sigma, Partition const &p, Caps const &caps)
{
  auto a = quotient_gset(sigma, p, caps);
  auto family = congruences(a, caps);

  ConResult result;
  auto &r = result.report;
  r.partition = to_string(p);
  r.quotient_size = a.size();
  r.group_order = a.group_order();
  r.regular = is_regular(a);
  r.congruence_count = family.size();

  if (family.size() <= kMaxLatticeSize) {
    result.lattice = lattice_of_equivalences(family);
    try {
      r.modular = is_modular(*result.lattice);
      r.distributive = is_distributive(*result.lattice);
    } catch (Error const &e) {
      if (e.code() != ErrorCode::AssignmentCapExceeded)
        throw;
      r.modular.reset();
      r.distributive.reset();
    }
  }
  return result;
}

inline reports::CheckReport check_report(Presentation const &sigma, std::uint32_t n_max, std::uint32_t k_max,
                                         Caps const &caps)
{
  auto e = check_condition_e(sigma, n_max, caps);

  reports::CheckReport r;
  r.satisfies_e = to_string(e.satisfies_e);
  r.permutative = e.permutative.permutative();
  r.n_max = n_max;
  if (e.permutative.witness) {
    r.witness_length = e.permutative.witness->n;
    std::vector<std::uint32_t> images;
    for (auto x : e.permutative.witness->g.images())
      images.push_back(x + 1);
    r.witness_permutation = images;
  }
  r.contains_lz = e.contains_lz;
  r.contains_rz = e.contains_rz;
  r.contains_x = e.contains_x;
  r.contains_xdual = e.contains_xdual;
  r.violations = e.violations();

  switch (e.satisfies_e) {
  case Verdict::True: {
    auto k = least_pk(sigma, k_max, caps);
    auto n = least_lemma_level(sigma, std::min(n_max, kMaxLemmaLevel), caps);
    if (k && n) {
      auto bound = bound_params(*k, *n);
      r.k = *k;
      r.n = *n;
      r.N = bound.N.str();
      r.card_bound_bits = bound.card_bound_bit_length().str();
    }
    r.conclusion = "permutative and contains none of LZ, RZ, X, X-dual: the lattice of overcommutative "
                   "subvarieties satisfies a nontrivial lattice identity";
    break;
  }
  case Verdict::False: {
    std::string which;
    for (auto const &v : r.violations)
      which += (which.empty() ? "" : ", ") + v;
    r.conclusion = which + ": the lattice of overcommutative subvarieties satisfies no nontrivial "
                           "lattice identity";
    break;
  }
  case Verdict::Unknown:
    r.conclusion = "no permutation identity of length <= " + std::to_string(n_max) +
                   " was derived; undecided within the search bound";
    break;
  }
  return r;
}

inline reports::DeriveReport derive_report(Presentation const &sigma, Identity const &id, Caps const &caps)
{
  if (!id.balanced())
    throw Error(ErrorCode::UnbalancedIdentity, to_string(id) + " is not balanced");
  return {to_string(id), derivable(sigma, id, caps)};
}

// ---------------------------------------------------------------------------
// text output

inline std::string yes_no(std::optional<bool> b)
{
  if (!b)
    return "unknown";
  return *b ? "true" : "false";
}

inline void print(std::ostream &out, reports::WordsReport const &r)
{
  for (auto const &w : r.words)
    out << w << '\n';
  out << "count: " << r.count << '\n';
}

inline void print(std::ostream &out, reports::PhiReport const &r)
{
  for (auto const &cls : r.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i)
      out << (i ? " " : "") << cls[i];
    out << '\n';
  }
  out << "classes: " << r.class_count << '\n';
}

inline void print(std::ostream &out, reports::ConReport const &r)
{
  out << "partition: " << r.partition << '\n'
      << "quotient size: " << r.quotient_size << '\n'
      << "group order: " << r.group_order << '\n'
      << "regular: " << (r.regular ? "true" : "false") << '\n'
      << "congruences: " << r.congruence_count << '\n'
      << "modular: " << yes_no(r.modular) << '\n'
      << "distributive: " << yes_no(r.distributive) << '\n';
}

inline void print(std::ostream &out, reports::CheckReport const &r)
{
  out << "permutative: ";
  if (r.permutative) {
    out << "yes (n=" << *r.witness_length << ", g=[";
    for (std::size_t i = 0; i < r.witness_permutation->size(); ++i)
      out << (i ? " " : "") << (*r.witness_permutation)[i];
    out << "])\n";
  } else {
    out << "no up to n=" << r.n_max << '\n';
  }
  out << "contains LZ: " << (r.contains_lz ? "true" : "false") << '\n'
      << "contains RZ: " << (r.contains_rz ? "true" : "false") << '\n'
      << "contains X: " << (r.contains_x ? "true" : "false") << '\n'
      << "contains X-dual: " << (r.contains_xdual ? "true" : "false") << '\n'
      << "satisfies e: " << r.satisfies_e << '\n';
  if (r.k) {
    out << "k: " << *r.k << '\n'
        << "n: " << *r.n << '\n'
        << "N: " << *r.N << '\n'
        << "card bound: 2^(N^2), " << *r.card_bound_bits << " bits\n";
  }
  out << "conclusion: " << r.conclusion << '\n';
}

inline void print(std::ostream &out, reports::DeriveReport const &r)
{ out << (r.derivable ? "derivable" : "not derivable") << '\n'; }

// ---------------------------------------------------------------------------
// entry point

struct RunConfig
{
  std::string presentation_path;
  std::string content;
  std::string partition;
  std::string identity;
  std::string lattice_out;
  std::uint32_t n_max = 6;
  std::uint32_t k_max = 3;
  std::size_t cap_words = 1'000'000;
  std::size_t cap_congruences = 100'000;
  bool json = false;
};

inline int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Congruence lattices of overcommutative semigroup varieties", "oclattice"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--presentation", cfg.presentation_path, "identity file, one '<word> = <word>' per line");
  app.add_option("--n-max", cfg.n_max, "longest permutation identity searched")->check(CLI::Range(2u, kMaxPermutativityDegree));
  app.add_option("--k-max", cfg.k_max, "largest P_k level searched")->check(CLI::Range(0u, 4u));
  app.add_option("--cap-words", cfg.cap_words, "largest word class enumerated")->check(CLI::PositiveNumber);
  app.add_option("--cap-congruences", cfg.cap_congruences, "largest congruence lattice enumerated")
    ->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "emit JSON instead of text");

  auto *words = app.add_subcommand("words", "list the words of a content class");
  words->add_option("--content", cfg.content, "e.g. x:2,y:1")->required();

  auto *phi = app.add_subcommand("phi", "classes of the presentation's congruence on a content class");
  auto *phi_content = phi->add_option("--content", cfg.content, "e.g. x:2,y:1");
  auto *phi_partition = phi->add_option("--partition", cfg.partition, "e.g. 3,2,1");
  phi_content->excludes(phi_partition);
  phi->require_option(1);

  auto *con = app.add_subcommand("con", "congruence lattice of the quotient G-set");
  con->add_option("--partition", cfg.partition, "e.g. 1,1,1")->required();
  con->add_option("--lattice-out", cfg.lattice_out, "write the lattice as JSON to this path");

  auto *check = app.add_subcommand("check", "decide permutativity and the forbidden subvarieties");

  auto *derive = app.add_subcommand("derive", "decide whether an identity follows from the presentation");
  derive->add_option("identity", cfg.identity, "'<word> = <word>'")->required();

  std::vector<char const *> argv{"oclattice"};
  for (auto const &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return Ok;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return Parse;
  }

  Caps caps;
  caps.max_words = cfg.cap_words;
  caps.max_congruences = cfg.cap_congruences;

  auto emit = [&](auto const &report) {
    if (cfg.json)
      out << nlohmann::json(report).dump(2) << '\n';
    else
      print(out, report);
  };

  try {
    Presentation sigma;
    if (!cfg.presentation_path.empty())
      sigma = load_presentation(cfg.presentation_path);

    if (*words) {
      emit(words_report(parse_content(cfg.content), caps));
      return Ok;
    }

    if (*phi) {
      auto content = cfg.content.empty() ? parse_partition(cfg.partition).canonical_content()
                                         : parse_content(cfg.content);
      emit(phi_report(sigma, content, caps));
      return Ok;
    }

    if (*con) {
      auto result = con_report(sigma, parse_partition(cfg.partition), caps);
      if (!cfg.lattice_out.empty()) {
        if (!result.lattice)
          throw Error(ErrorCode::LatticeCapExceeded, "lattice too large to export");
        std::ofstream file(cfg.lattice_out);
        if (!file)
          throw Error(ErrorCode::ParseError, "cannot write '" + cfg.lattice_out + "'");
        file << lattice_to_json(*result.lattice).dump() << '\n';
      }
      emit(result.report);
      return Ok;
    }

    if (*check) {
      auto report = check_report(sigma, cfg.n_max, cfg.k_max, caps);
      emit(report);
      if (report.satisfies_e == "true")
        return Ok;
      if (report.satisfies_e == "false")
        return False;
      return Unknown;
    }

    if (*derive) {
      auto report = derive_report(sigma, parse_identity(cfg.identity), caps);
      emit(report);
      return report.derivable ? Ok : False;
    }
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return Internal;
}

} // namespace oclattice::cli

#endif // OCLATTICE_CLI_HPP
