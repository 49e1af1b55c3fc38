#include <gtest/gtest.h>

#include <array>
#include <cstdint>
#include <vector>

#include <oclattice/deciders.hpp>
#include <oclattice/rewrite.hpp>

#include "helpers.hpp"

using namespace oclattice;
using testing_helpers::all_contents;
using testing_helpers::all_words;
using testing_helpers::P;
using testing_helpers::W;

TEST(Deciders, Com)
{
  EXPECT_TRUE(holds_in_com(W("xy"), W("yx")));
  EXPECT_FALSE(holds_in_com(W("xy"), W("x")));
  EXPECT_TRUE(holds_in_com(W("xxyz"), W("zxyx")));
}

TEST(Deciders, LeftAndRightZero)
{
  EXPECT_TRUE(holds_in_lz(W("xy"), W("x")));
  EXPECT_FALSE(holds_in_lz(W("xy"), W("yx")));
  EXPECT_TRUE(holds_in_lz(W("xyz"), W("xzy")));
  EXPECT_TRUE(holds_in_rz(W("xy"), W("y")));
  EXPECT_FALSE(holds_in_rz(W("xyz"), W("xzy")));
  EXPECT_TRUE(holds_in_rz(W("xzy"), W("yzy")));
}

TEST(Deciders, X)
{
  EXPECT_TRUE(holds_in_x(W("xyzt"), W("xytz")));
  EXPECT_TRUE(holds_in_x(W("xxyy"), W("xyxy")));
  EXPECT_FALSE(holds_in_x(W("xy"), W("yx")));
  EXPECT_FALSE(holds_in_x(W("xyx"), W("xxy")));
  EXPECT_TRUE(holds_in_x(W("x"), W("x")));
}

TEST(Deciders, XDual)
{
  EXPECT_TRUE(holds_in_x_dual(W("tzyx"), W("ztyx")));
  EXPECT_FALSE(holds_in_x(W("xxy"), W("yxx")));
  EXPECT_TRUE(holds_in_x_dual(W("yyxx"), W("yxyx")));
}

TEST(Deciders, Pk)
{
  EXPECT_TRUE(holds_in_pk(W("xyzw"), W("xzyw"), 1));
  EXPECT_FALSE(holds_in_pk(W("xyz"), W("xzy"), 1));
  EXPECT_FALSE(holds_in_pk(W("xy"), W("yx"), 1));
  EXPECT_TRUE(holds_in_pk(W("xy"), W("yx"), 0));
  EXPECT_EQ(to_string(pk_identity(1)), "abcd = acbd");
  auto id = pk_identity(1);
  EXPECT_EQ(id.lhs.size(), 4u);
  EXPECT_TRUE(holds_in_pk(id.lhs, id.rhs, 1));
  EXPECT_FALSE(holds_in_pk(id.lhs, id.rhs, 2));
}

TEST(Deciders, ContainsFixed)
{
  auto lz = P({"xyz = xzy"});
  auto remark = testing_helpers::remark();
  EXPECT_TRUE(contains_fixed(lz, FixedVariety::lz()));
  EXPECT_FALSE(contains_fixed(remark, FixedVariety::lz()));
  EXPECT_FALSE(contains_fixed(remark, FixedVariety::x()));
  EXPECT_TRUE(contains_fixed(Presentation{}, FixedVariety::x()));

  auto sx = testing_helpers::sigma_x();
  EXPECT_TRUE(contains_fixed(sx, FixedVariety::x()));
  EXPECT_FALSE(contains_fixed(sx, FixedVariety::lz()));
  EXPECT_FALSE(contains_fixed(sx, FixedVariety::rz()));
  EXPECT_FALSE(contains_fixed(sx, FixedVariety::x_dual()));
}

TEST(Deciders, DefiningPresentationsHoldInTheirVariety)
{
  for (auto f : {FixedVariety::com(), FixedVariety::lz(), FixedVariety::rz(), FixedVariety::x(),
                 FixedVariety::x_dual(), FixedVariety::pk(0), FixedVariety::pk(1), FixedVariety::pk(2)})
    EXPECT_TRUE(contains_fixed(defining_presentation(f), f)) << to_string(f);
}

// ---------------------------------------------------------------------------
// oracles

namespace
{

// Compare a decider with the closure of a presentation on every pair of
// every content over <= 3 letters with words of length <= max_len.
template<typename Decider>
std::size_t mismatches_against_closure(Presentation const &sigma, Decider decide, std::uint32_t max_len,
                                       std::size_t &pairs)
{
  std::size_t bad = 0;
  for (auto const &c : all_contents(3, max_len)) {
    auto phi = phi_lambda(sigma, c);
    auto const &ws = phi.words;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i; j < ws.size(); ++j) {
        ++pairs;
        bool expected = phi.classes.related(i, j);
        if (decide(ws[i], ws[j]) != expected) {
          ++bad;
          ADD_FAILURE() << to_string(ws[i]) << " = " << to_string(ws[j]) << " expected " << expected;
        }
      }
    }
  }
  return bad;
}

// Multiplication table of the 2-element left-zero semigroup: ab = a.
constexpr std::array<std::array<int, 2>, 2> kLeftZero{{{0, 0}, {1, 1}}};

// Value of w under an assignment encoded as a bitmask over letter indices.
int eval_left_zero(Word const &w, unsigned assignment)
{
  auto value = [&](Letter x) { return static_cast<int>((assignment >> (x.index - 1)) & 1u); };
  int acc = value(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i)
    acc = kLeftZero[acc][value(w[i])];
  return acc;
}

} // namespace

TEST(DecidersOracle, XAgreesWithClosureOfItsDefiningIdentities)
{
  std::size_t pairs = 0;
  EXPECT_EQ(mismatches_against_closure(testing_helpers::sigma_x(), holds_in_x, 7, pairs), 0u);
  EXPECT_GT(pairs, 100000u);
}

TEST(DecidersOracle, XDualAgreesWithClosureOfReversedIdentities)
{
  std::size_t pairs = 0;
  EXPECT_EQ(mismatches_against_closure(testing_helpers::sigma_x().reversed(), holds_in_x_dual, 6, pairs), 0u);
}

TEST(DecidersOracle, PkAgreesWithClosure)
{
  for (std::uint32_t k = 0; k <= 2; ++k) {
    std::size_t pairs = 0;
    auto sigma = defining_presentation(FixedVariety::pk(k));
    auto decide = [k](Word const &u, Word const &v) { return holds_in_pk(u, v, k); };
    EXPECT_EQ(mismatches_against_closure(sigma, decide, 7, pairs), 0u) << "k=" << k;
  }
}

TEST(DecidersOracle, LeftZeroMatchesTwoElementModel)
{
  auto words = all_words(3, 6);
  std::size_t bad = 0;
  for (auto const &u : words) {
    for (auto const &v : words) {
      bool model = true;
      for (unsigned a = 0; a < 8 && model; ++a)
        model = eval_left_zero(u, a) == eval_left_zero(v, a);
      if (model != holds_in_lz(u, v))
        ++bad;
    }
  }
  EXPECT_EQ(bad, 0u);
}

// ---------------------------------------------------------------------------
// properties

TEST(DecidersProperty, Duality)
{
  for (auto const &u : all_words(3, 5)) {
    for (auto const &v : all_words(3, 4)) {
      ASSERT_EQ(holds_in_rz(u, v), holds_in_lz(reverse(u), reverse(v)));
      ASSERT_EQ(holds_in_x_dual(u, v), holds_in_x(reverse(u), reverse(v)));
    }
  }
}

TEST(DecidersProperty, PkAntiMonotoneInK)
{
  for (auto const &c : all_contents(3, 7)) {
    auto ws = enumerate_words(c);
    for (auto const &u : ws)
      for (auto const &v : ws)
        for (std::uint32_t k = 0; k < 3; ++k)
          if (holds_in_pk(u, v, k + 1)) {
            ASSERT_TRUE(holds_in_pk(u, v, k));
          }
  }
}

TEST(DecidersProperty, EquivalenceOnEachContentClass)
{
  std::vector<std::function<bool(Word const &, Word const &)>> deciders{
    holds_in_com, holds_in_lz, holds_in_rz, holds_in_x, holds_in_x_dual,
    [](Word const &u, Word const &v) { return holds_in_pk(u, v, 1); }};
  for (auto const &c : all_contents(3, 5)) {
    auto ws = enumerate_words(c);
    for (auto const &d : deciders) {
      for (auto const &u : ws) {
        ASSERT_TRUE(d(u, u));
        for (auto const &v : ws) {
          ASSERT_EQ(d(u, v), d(v, u));
          if (!d(u, v))
            continue;
          for (auto const &w : ws)
            if (d(v, w)) {
              ASSERT_TRUE(d(u, w));
            }
        }
      }
    }
  }
}
