#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zerolen/sequence.hpp"

using namespace zerolen;

namespace {
const auto c5 = make_group({5});
const auto c2c4 = make_group({2, 4});
const Element e = c2c4.element({1, 0});
const Element g = c2c4.element({0, 1});
Element plus(Element a, Element b) { return c2c4.add(a, b); }
}  // namespace

TEST(Sequence, Sigma) {
  EXPECT_EQ(sigma(Sequence::of(c5, {{1, 5}})), 0);
  EXPECT_EQ(sigma(Sequence(c5)), 0);
  EXPECT_EQ(sigma(Sequence::of(c2c4, {{e, 1}, {g, 3}, {plus(e, g), 1}})), 0);
  EXPECT_EQ(sigma(Sequence::of(c5, {{1, 2}, {2, 1}})), 4);
}

TEST(Sequence, SubsequenceSums) {
  EXPECT_EQ(subsequence_sums(Sequence::of(c5, {{1, 1}})), (std::vector<Element>{1}));
  EXPECT_EQ(subsequence_sums(Sequence::of(c5, {{1, 1}, {4, 1}})), (std::vector<Element>{0, 1, 4}));
  EXPECT_THROW(subsequence_sums(Sequence::of(c5, {{1, 30}})), ResourceError);
  EXPECT_NO_THROW(subsequence_sums(Sequence::of(c5, {{1, 30}}), {40}));
}

TEST(Sequence, IsAtom) {
  EXPECT_TRUE(is_atom(Sequence::of(c5, {{1, 5}})));
  EXPECT_FALSE(is_atom(Sequence::of(c5, {{1, 2}, {4, 2}})));
  EXPECT_TRUE(is_atom(Sequence::of(c2c4, {{e, 1}, {g, 1}, {plus(g, g), 1}, {plus(e, g), 1}})));
  EXPECT_TRUE(is_atom(Sequence::of(c5, {{0, 1}})));
  EXPECT_FALSE(is_atom(Sequence(c5)));
  EXPECT_FALSE(is_atom(Sequence::of(c5, {{1, 4}})));
}

TEST(Sequence, IsAtomAgreesWithBruteForce) {
  for (const auto& grp : {make_group({2, 4}), make_group({6}), make_group({2, 2, 2})}) {
    std::vector<Element> all(grp.order());
    for (Element x = 0; x < grp.order(); ++x) all[x] = x;
    oracle::for_each_multiset(grp, all, 6, [&](const oracle::Counts& c) {
      EXPECT_EQ(is_atom(Sequence(grp, c)), oracle::is_minimal_zero_sum(grp, c)) << Sequence(grp, c).str();
    });
  }
}

TEST(Sequence, CrossNumber) {
  EXPECT_EQ(cross_number(Sequence::of(c5, {{1, 5}})), Rational(1));
  EXPECT_EQ(cross_number(Sequence::of(c2c4, {{e, 1}, {g, 2}, {plus(e, plus(g, g)), 1}})), Rational(3, 2));
  EXPECT_EQ(cross_number(Sequence(c5)), Rational(0));
}

TEST(Sequence, GNorm) {
  EXPECT_EQ(g_norm(Sequence::of(c5, {{2, 5}}), 1), 2);
  EXPECT_EQ(g_norm(Sequence::of(c5, {{1, 5}}), 1), 1);
  EXPECT_EQ(g_norm(Sequence::of(c5, {{1, 1}, {4, 1}}), 1), 1);
  EXPECT_THROW(g_norm(Sequence::of(c5, {{1, 2}}), 1), DomainError);
  EXPECT_THROW(g_norm(Sequence::of(c5, {{1, 5}}), 0), DomainError);
  EXPECT_THROW(g_norm(Sequence::of(c2c4, {{g, 4}}), g), DomainError);
}

TEST(Sequence, GNormIsAdditive) {
  std::mt19937 rng(7);
  for (int n : {5, 7, 8}) {
    const auto grp = make_group({n});
    for (Element gen = 1; gen < n; ++gen) {
      if (grp.element_order(gen) != n) continue;
      for (int trial = 0; trial < 50; ++trial) {
        // a product of random zero-sum pieces
        Sequence total(grp);
        long long parts = 0;
        const int pieces = 1 + static_cast<int>(rng() % 4);
        for (int p = 0; p < pieces; ++p) {
          Sequence s(grp);
          const int len = 1 + static_cast<int>(rng() % 5);
          for (int i = 0; i < len; ++i) s.insert(static_cast<Element>(rng() % n));
          s.insert(grp.neg(sigma(s)));
          if (sigma(s) != 0) s.insert(grp.neg(sigma(s)));
          parts += g_norm(s, gen);
          total = total * s;
        }
        EXPECT_EQ(g_norm(total, gen), parts) << total.str();
      }
    }
  }
}

TEST(Sequence, NegateDivideMultiply) {
  EXPECT_EQ(negate(Sequence::of(c5, {{1, 5}})), Sequence::of(c5, {{4, 5}}));
  EXPECT_EQ(divide(Sequence::of(c5, {{1, 3}, {4, 1}}), Sequence::of(c5, {{1, 1}, {4, 1}})), Sequence::of(c5, {{1, 2}}));
  EXPECT_THROW(divide(Sequence::of(c5, {{1, 1}}), Sequence::of(c5, {{4, 1}})), DomainError);
  const auto u = Sequence::of(c2c4, {{e, 1}, {g, 3}, {plus(e, g), 1}});
  const auto a = u * negate(u);
  EXPECT_EQ(a.size(), 10);
  EXPECT_EQ(a.count(g), 3);
  EXPECT_EQ(a.count(c2c4.neg(g)), 3);
  EXPECT_EQ(a.count(e), 2);
  EXPECT_EQ(sigma(a), 0);
  EXPECT_THROW(multiply(u, Sequence::of(c5, {{1, 1}})), DomainError);
}

TEST(Sequence, ParseAndPrint) {
  const auto s = parse_sequence(c5, "(1)^5*(4)^5");
  EXPECT_EQ(s, Sequence::of(c5, {{1, 5}, {4, 5}}));
  EXPECT_EQ(parse_sequence(c5, "1^5 * -1^5"), s);
  EXPECT_EQ(parse_sequence(c5, s.str()), s);
  const auto t = parse_sequence(c2c4, "(1,0)*(0,1)^3*(1,1)");
  EXPECT_EQ(parse_sequence(c2c4, t.str()), t);
  EXPECT_TRUE(parse_sequence(c5, "").empty());
  EXPECT_THROW(parse_sequence(c2c4, "1^2"), ParseError);
  EXPECT_THROW(parse_sequence(c2c4, "(1,0,0)"), ParseError);
  EXPECT_THROW(parse_sequence(c5, "(1)^"), ParseError);
  try {
    parse_sequence(c5, "(1)^5 + (4)");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.position(), 6u);
  }
}
