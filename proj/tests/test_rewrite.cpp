#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include <oclattice/perm.hpp>
#include <oclattice/rewrite.hpp>

#include "helpers.hpp"

using namespace oclattice;
using testing_helpers::all_contents;
using testing_helpers::P;
using testing_helpers::W;

TEST(Presentation, ParseFileFormat)
{
  auto sigma = parse_presentation("# Remark variety\n\nxxy = yxx\n  xyz=xzy  \n");
  ASSERT_EQ(sigma.size(), 2u);
  EXPECT_EQ(to_string(sigma.identities()[0]), "xxy = yxx");
  EXPECT_TRUE(sigma.balanced());
  EXPECT_THROW(parse_presentation("xy = yx = x\n"), Error);
  EXPECT_THROW(parse_presentation("xy yx\n"), Error);
  EXPECT_THROW(load_presentation("/nonexistent/path.txt"), Error);
  auto file = load_presentation(OCLATTICE_SAMPLES "/remark.txt");
  EXPECT_EQ(file.size(), 2u);
}

TEST(Presentation, UnionIsSetUnion)
{
  auto a = P({"xy = yx", "xxy = yxx"});
  auto b = P({"xxy = yxx", "xyz = xzy"});
  EXPECT_EQ((a + b).size(), 3u);
  EXPECT_EQ((a + a).size(), 2u);
}

// ---------------------------------------------------------------------------
// match_pattern

namespace
{

// Every way to cut target[start,end) into pattern.size() nonempty pieces,
// kept when repeated pattern letters receive equal pieces.
std::set<std::tuple<std::size_t, std::size_t, std::map<Letter, Word>>> brute_force_matches(Word const &pattern,
                                                                                         Word const &target)
{
  std::set<std::tuple<std::size_t, std::size_t, std::map<Letter, Word>>> out;
  auto m = pattern.size();
  for (std::size_t start = 0; start < target.size(); ++start) {
    for (std::size_t end = start + m; end <= target.size(); ++end) {
      std::vector<std::size_t> cuts(m + 1);
      cuts[0] = start;
      cuts[m] = end;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
          std::map<Letter, Word> sub;
          for (std::size_t j = 0; j < m; ++j) {
            auto piece = target.factor(cuts[j], cuts[j + 1]);
            auto [it, inserted] = sub.emplace(pattern[j], piece);
            if (!inserted && it->second != piece)
              return;
          }
          out.emplace(start, end, sub);
          return;
        }
        for (std::size_t c = cuts[i - 1] + 1; c + (m - i) <= end; ++c) {
          cuts[i] = c;
          rec(i + 1);
        }
      };
      if (m == 1)
        out.emplace(start, end, std::map<Letter, Word>{{pattern[0], target.factor(start, end)}});
      else
        rec(1);
    }
  }
  return out;
}

std::set<std::tuple<std::size_t, std::size_t, std::map<Letter, Word>>> as_set(std::vector<Match> const &ms)
{
  std::set<std::tuple<std::size_t, std::size_t, std::map<Letter, Word>>> out;
  for (auto const &m : ms)
    out.emplace(m.start, m.end, m.substitution);
  return out;
}

} // namespace

TEST(Match, Examples)
{
  auto square = match_pattern(W("xx"), W("abab"));
  ASSERT_EQ(square.size(), 1u);
  EXPECT_EQ(square[0].start, 0u);
  EXPECT_EQ(square[0].end, 4u);
  EXPECT_EQ(square[0].substitution.at(parse_letter("x")), W("ab"));

  auto xy = match_pattern(W("xy"), W("ab"));
  ASSERT_FALSE(xy.empty());
  EXPECT_EQ(xy[0].substitution.at(parse_letter("x")), W("a"));
  EXPECT_EQ(xy[0].substitution.at(parse_letter("y")), W("b"));

  EXPECT_TRUE(match_pattern(W("xx"), W("aba")).empty());
  EXPECT_THROW(match_pattern(W("xyz"), W("ab")), Error);
  EXPECT_THROW(match_pattern(W("aaaaaaaaaaaaaaaaa"), W("bbbbbbbbbbbbbbbbbbbbbbbbbbb")), Error);
}

TEST(MatchOracle, AgreesWithCutPointEnumeration)
{
  std::vector<Word> patterns{W("x"), W("xx"), W("xy"), W("xyx"), W("xxy"), W("xyzx"), W("xyyx")};
  for (auto const &pattern : patterns) {
    for (auto const &target : testing_helpers::all_words(2, 7)) {
      if (target.size() < pattern.size())
        continue;
      ASSERT_EQ(as_set(match_pattern(pattern, target)), brute_force_matches(pattern, target))
        << to_string(pattern) << " in " << to_string(target);
    }
  }
}

// ---------------------------------------------------------------------------
// rewrite and phi

TEST(Rewrite, Neighbors)
{
  auto n = rewrite_neighbors(W("xxy"), P({"xy = yx"}));
  EXPECT_TRUE(n.contains(W("xyx")));
  EXPECT_FALSE(n.contains(W("xxy")));
  EXPECT_TRUE(rewrite_neighbors(W("xyz"), P({"xxy = yxx"})).empty());
  EXPECT_TRUE(rewrite_neighbors(W("xy"), Presentation{}).empty());
}

TEST(Rewrite, PhiExamples)
{
  auto com = phi_lambda(P({"xy = yx"}), parse_content("x:2,y:1"));
  EXPECT_EQ(com.classes.class_count(), 1u);
  EXPECT_EQ(phi_lambda(Presentation{}, parse_content("x:1,y:1,z:1")).classes.class_count(), 6u);

  auto lz = phi_lambda(P({"xyz = xzy"}), parse_content("x:1,y:1,z:1"));
  ASSERT_EQ(lz.classes.class_count(), 3u);
  for (auto const &members : lz.class_members())
    for (auto const &w : members)
      EXPECT_EQ(w.front(), members.front().front());

  try {
    phi_lambda(P({"xy = x"}), parse_content("x:1,y:1"));
    FAIL();
  } catch (Error const &e) {
    EXPECT_EQ(e.code(), ErrorCode::UnbalancedIdentity);
  }
}

TEST(Rewrite, Derivable)
{
  EXPECT_TRUE(derivable(P({"xy = yx"}), W("xxyyzz"), W("yyxxzz")));
  EXPECT_TRUE(derivable(testing_helpers::remark(), W("xxyyzz"), W("yyxxzz")));
  EXPECT_FALSE(derivable(Presentation{}, W("xy"), W("yx")));
  EXPECT_FALSE(derivable(P({"xy = yx"}), W("xy"), W("x")));
}

TEST(Rewrite, RemarkClassCounts)
{
  for (std::uint32_t n = 2; n <= 6; ++n)
    EXPECT_EQ(phi_lambda(testing_helpers::remark(), Partition(std::vector<std::uint32_t>(n, 1)).canonical_content())
                .classes.class_count(),
              n);
}

// ---------------------------------------------------------------------------
// oracle: pairwise BFS derivation search

namespace
{

bool bfs_derivable(Presentation const &sigma, Word const &u, Word const &v)
{
  std::set<Word> seen{u};
  std::vector<Word> frontier{u};
  while (!frontier.empty()) {
    auto w = frontier.back();
    frontier.pop_back();
    if (w == v)
      return true;
    for (auto const &n : rewrite_neighbors(w, sigma))
      if (seen.insert(n).second)
        frontier.push_back(n);
  }
  return false;
}

} // namespace

TEST(RewriteOracle, ClosureMatchesBfsDerivations)
{
  std::vector<Presentation> sigmas{testing_helpers::remark(), P({"xyx = yxx"}), P({"xxyy = yyxx"}),
                                   testing_helpers::sigma_x()};
  for (auto const &sigma : sigmas) {
    for (auto const &c : all_contents(3, 5)) {
      auto phi = phi_lambda(sigma, c);
      for (std::size_t i = 0; i < phi.words.size(); ++i)
        for (std::size_t j = i + 1; j < phi.words.size(); ++j)
          ASSERT_EQ(phi.classes.related(i, j), bfs_derivable(sigma, phi.words[i], phi.words[j]))
            << sigma.key() << " " << to_string(phi.words[i]) << " " << to_string(phi.words[j]);
    }
  }
}

// ---------------------------------------------------------------------------
// properties

namespace
{

Presentation random_presentation(std::mt19937 &rng)
{
  std::uniform_int_distribution<int> count(1, 2);
  std::vector<Identity> ids;
  for (int i = count(rng); i > 0; --i)
    ids.push_back(testing_helpers::random_balanced_identity(rng, 3, 4));
  return Presentation(ids);
}

} // namespace

TEST(RewriteProperty, JoinHomomorphism)
{
  std::mt19937 rng(20261017);
  auto contents = all_contents(3, 6);
  std::uniform_int_distribution<std::size_t> pick(0, contents.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    auto s1 = random_presentation(rng);
    auto s2 = random_presentation(rng);
    auto const &c = contents[pick(rng)];
    auto lhs = phi_lambda(s1 + s2, c).classes;
    auto rhs = phi_lambda(s1, c).classes.join(phi_lambda(s2, c).classes);
    EXPECT_EQ(lhs, rhs) << s1.key() << " | " << s2.key() << " on " << to_string(c);
  }
}

TEST(RewriteProperty, Monotone)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto s1 = random_presentation(rng);
    auto s2 = s1 + random_presentation(rng);
    for (auto const &c : {parse_content("a:2,b:2,c:1"), parse_content("a:1,b:1,c:1,d:1")})
      EXPECT_TRUE(phi_lambda(s1, c).classes.refines(phi_lambda(s2, c).classes));
  }
}

TEST(RewriteProperty, StableUnderRenaming)
{
  std::vector<Presentation> sigmas{testing_helpers::remark(), P({"xyx = yxx"}), testing_helpers::sigma_x()};
  for (auto const &sigma : sigmas) {
    for (auto p : {Partition({1, 1, 1}), Partition({2, 2, 1}), Partition({1, 1, 1, 1})}) {
      auto phi = phi_lambda(sigma, p.canonical_content());
      auto group = g_lambda(p);
      for (auto const &g : group.elements())
        for (std::size_t i = 0; i < phi.words.size(); ++i)
          for (std::size_t j = i + 1; j < phi.words.size(); ++j)
            if (phi.classes.related(i, j)) {
              ASSERT_EQ(phi.class_of(act_on_word(g, phi.words[i])), phi.class_of(act_on_word(g, phi.words[j])));
            }
    }
  }
}

TEST(RewriteProperty, ReversalDuality)
{
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto sigma = random_presentation(rng);
    auto c = parse_content("a:2,b:1,c:2");
    auto phi = phi_lambda(sigma, c);
    auto dual = phi_lambda(sigma.reversed(), c);
    for (std::size_t i = 0; i < phi.words.size(); ++i)
      for (std::size_t j = i + 1; j < phi.words.size(); ++j)
        ASSERT_EQ(phi.classes.related(i, j),
                  dual.class_of(reverse(phi.words[i])) == dual.class_of(reverse(phi.words[j])));
  }
}

TEST(RewriteProperty, PkClassesAreBoundaryFibers)
{
  for (std::uint32_t k = 1; k <= 2; ++k) {
    auto sigma = defining_presentation(FixedVariety::pk(k));
    for (auto const &c : {parse_content("x:2,y:1,z:1"), parse_content("x:2,y:2,z:2"), parse_content("a:1,b:1,c:1,d:1,e:1")}) {
      auto phi = phi_lambda(sigma, c);
      for (std::size_t i = 0; i < phi.words.size(); ++i)
        for (std::size_t j = 0; j < phi.words.size(); ++j)
          ASSERT_EQ(phi.classes.related(i, j), holds_in_pk(phi.words[i], phi.words[j], k));
    }
  }
}

TEST(PhiCache, ConcurrentReadersShareEntries)
{
  PhiCache cache;
  auto sigma = testing_helpers::remark();
  auto c = parse_content("a:1,b:1,c:1,d:1,e:1");
  std::vector<std::size_t> counts(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < counts.size(); ++t)
    threads.emplace_back([&, t] { counts[t] = cache.get(sigma, c)->classes.class_count(); });
  for (auto &th : threads)
    th.join();
  for (auto n : counts)
    EXPECT_EQ(n, 5u);
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(cache.get(sigma, c).get(), cache.get(sigma, c).get());
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}
