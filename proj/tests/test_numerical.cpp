#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "zerolen/numerical.hpp"

using namespace zerolen;

namespace {

/// Factorization lengths of a over gens by direct partition enumeration.
std::set<int> naive_lengths(const std::vector<long long>& gens, long long a) {
  std::set<int> out;
  std::function<void(std::size_t, long long, int)> rec = [&](std::size_t i, long long rest, int len) {
    if (rest == 0) {
      out.insert(len);
      return;
    }
    if (i == gens.size()) return;
    for (long long c = 0; c * gens[i] <= rest; ++c) rec(i + 1, rest - c * gens[i], len + static_cast<int>(c));
  };
  rec(0, a, 0);
  return out;
}

LengthSet ls(const std::set<int>& s) { return LengthSet(std::vector<int>(s.begin(), s.end())); }

}  // namespace

TEST(Numerical, Construction) {
  const NumericalMonoid h({6, 3, 2, 5});
  EXPECT_EQ(h.generators(), (std::vector<long long>{2, 3}));
  EXPECT_EQ(h.frobenius(), 1);
  EXPECT_EQ(NumericalMonoid({3, 5, 7}).frobenius(), 4);
  EXPECT_EQ(NumericalMonoid({6, 7, 10, 11, 15}).str(), "<6,7,10,11,15>");
  EXPECT_THROW(NumericalMonoid({2, 4}), DomainError);
  EXPECT_THROW(NumericalMonoid({}), DomainError);
  EXPECT_THROW(NumericalMonoid({0, 1}), DomainError);
  EXPECT_EQ(nm_parse("<2, 3>").generators(), (std::vector<long long>{2, 3}));
  EXPECT_THROW(nm_parse("2;3"), ParseError);
}

TEST(Numerical, LengthSets) {
  const NumericalMonoid h23({2, 3}), h25({2, 5});
  EXPECT_EQ(nm_length_set(h23, 6), (LengthSet{2, 3}));
  EXPECT_EQ(nm_length_set(h23, 2), (LengthSet{1}));
  EXPECT_EQ(nm_length_set(h25, 10), (LengthSet{2, 5}));
  EXPECT_EQ(nm_length_set(h23, 0), (LengthSet{0}));
  EXPECT_THROW(nm_length_set(h23, 1), DomainError);
  for (const auto& gens : std::vector<std::vector<long long>>{{2, 3}, {2, 5}, {3, 4, 5}, {6, 7, 10, 11, 15}}) {
    const NumericalMonoid h(gens);
    for (long long a = 0; a <= 120; ++a) {
      const auto want = naive_lengths(h.generators(), a);
      ASSERT_EQ(h.contains(a), !want.empty()) << h.str() << " " << a;
      if (!want.empty()) {
        EXPECT_EQ(h.length_set(a), ls(want)) << h.str() << " " << a;
      }
    }
  }
}

TEST(Numerical, FormulasAgreeWithEnumeration) {
  for (const auto& gens : std::vector<std::vector<long long>>{{2, 3}, {2, 5}, {3, 4, 5}}) {
    const NumericalMonoid h(gens);
    const auto o = nm_observed(h, 200);
    EXPECT_EQ(o.max_rho, nm_elasticity(h)) << h.str();
    EXPECT_EQ(o.distance_gcd, nm_min_delta(h)) << h.str();
    EXPECT_EQ(o.distances.front(), nm_min_delta(h)) << h.str();
    // rho is attained exactly at multiples of n_1 * n_t
    const long long n1 = h.generators().front(), nt = h.generators().back();
    for (long long k = 1; k <= 4; ++k) EXPECT_EQ(rho(h.length_set(n1 * nt * k)), nm_elasticity(h));
  }
  EXPECT_EQ(nm_elasticity(NumericalMonoid({2, 3})), Rational(3, 2));
  EXPECT_EQ(nm_min_delta(NumericalMonoid({2, 3})), 1);
  EXPECT_EQ(nm_elasticity(NumericalMonoid({2, 5})), Rational(5, 2));
  EXPECT_EQ(nm_min_delta(NumericalMonoid({2, 5})), 3);
  EXPECT_EQ(nm_elasticity(NumericalMonoid({1})), Rational(1));
}

TEST(Numerical, StronglyPrimaryExponent) {
  const NumericalMonoid h({2, 3});
  EXPECT_EQ(strongly_primary_M(h, 2), 2);
  EXPECT_EQ(strongly_primary_M(h, 6), 4);
  EXPECT_EQ(strongly_primary_M(NumericalMonoid({1}), 1), 1);
  EXPECT_THROW(strongly_primary_M(h, 0), DomainError);
  // definition check: every s with max L(s) >= M lies in a + H, and M - 1 fails
  for (const auto& gens : std::vector<std::vector<long long>>{{2, 3}, {2, 5}, {3, 4, 5}}) {
    const NumericalMonoid g(gens);
    for (long long a : {gens.front(), gens.front() * gens.back()}) {
      const int m = strongly_primary_M(g, a);
      bool tight = false;
      for (long long s = 1; s <= 200; ++s) {
        if (!g.contains(s)) continue;
        const int mx = g.length_set(s).max();
        if (mx >= m) {
          EXPECT_TRUE(g.contains(s - a)) << g.str() << " a=" << a << " s=" << s;
        }
        if (mx == m - 1 && !g.contains(s - a)) tight = true;
      }
      if (m > 1) {
        EXPECT_TRUE(tight) << g.str() << " a=" << a;
      }
    }
  }
}

TEST(Numerical, BetaGap) {
  const NumericalMonoid h({2, 3});
  const auto b = beta_gap(h, 6, 2);
  EXPECT_EQ(b.M_b, 4);
  EXPECT_EQ(b.M_u, 2);
  EXPECT_EQ(b.L_power, (LengthSet{3, 4}));
  EXPECT_EQ(b.beta1, Rational(7, 6));
  EXPECT_EQ(b.beta2, Rational(10, 9));
  EXPECT_EQ(b.beta, Rational(10, 9));
  EXPECT_GT(beta_gap(NumericalMonoid({2, 5}), 10, 2).beta, Rational(1));
  EXPECT_THROW(beta_gap(h, 2, 2), DomainError);
  EXPECT_THROW(beta_gap(h, 6, 6), DomainError);
}

TEST(Numerical, ElasticityGap) {
  for (const auto& gens : std::vector<std::vector<long long>>{{2, 3}, {2, 5}}) {
    const auto r = verify_elasticity_gap(NumericalMonoid(gens), 200);
    EXPECT_TRUE(r.pass());
    EXPECT_GT(r.checked, 190);
  }
  EXPECT_THROW(verify_elasticity_gap(NumericalMonoid({1}), 200), DomainError);
}

TEST(Numerical, ProductLengthSets) {
  ProductMonoid d{0, {NumericalMonoid({2, 3}), NumericalMonoid({2, 3})}};
  EXPECT_EQ(product_length_set(d, {0, {6, 6}}), (LengthSet{4, 5, 6}));
  EXPECT_EQ(product_length_set(d, {0, {2, 3}}), (LengthSet{2}));
  ProductMonoid f{1, {NumericalMonoid({2, 3})}};
  EXPECT_EQ(product_length_set(f, {3, {6}}), (LengthSet{5, 6}));
  EXPECT_THROW(product_length_set(d, {0, {1, 6}}), DomainError);
  EXPECT_THROW(product_length_set(d, {0, {6}}), DomainError);
  EXPECT_THROW(product_length_set(d, {1, {6, 6}}), DomainError);
}

TEST(Numerical, YLBound) {
  ProductMonoid d{0, {NumericalMonoid({2, 3}), NumericalMonoid({2, 3})}};
  const auto r = y_L_bound(d, LengthSet{2, 3}, 120, 10);
  EXPECT_EQ(r.M, (std::vector<int>{4, 4}));
  EXPECT_EQ(r.y_L, 16);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.elements_checked, 10000);
  ProductMonoid one{0, {NumericalMonoid({2, 3})}};
  EXPECT_EQ(y_L_bound(one, LengthSet{2, 3}, 60, 5).y_L, 8);
  EXPECT_EQ(y_L_bound(d, LengthSet{4}, 40, 5).y_L, 8);
  ProductMonoid hf{0, {NumericalMonoid({1})}};
  EXPECT_THROW(y_L_bound(hf, LengthSet{2, 3}, 10, 5), DomainError);
}

TEST(Numerical, SmallGroupComparisonIntervalCase) {
  const auto r = verify_small_group_case(NumericalMonoid({2, 3}), SmallGroupCase::b2, 20);
  EXPECT_EQ(r.status(), "pass");
  EXPECT_GT(r.system_size, 50u);
  const auto bad = verify_small_group_case(NumericalMonoid({2, 5}), SmallGroupCase::b2, 20);
  EXPECT_EQ(bad.status(), "hypothesis-not-met");
  EXPECT_EQ(verify_small_group_case(NumericalMonoid({2, 3}), SmallGroupCase::b3, 20).status(), "hypothesis-not-met");
}

TEST(Numerical, SmallGroupComparisonC33Case) {
  // the hypotheses hold for both, but only the first realizes every member
  EXPECT_EQ(verify_small_group_case(NumericalMonoid({6, 7, 10, 11, 15}), SmallGroupCase::b3, 20).status(), "pass");
  const auto r = verify_small_group_case(NumericalMonoid({6, 8, 10, 15}), SmallGroupCase::b3, 20);
  EXPECT_TRUE(r.hypotheses_met);
  EXPECT_EQ(r.status(), "fail");
  EXPECT_TRUE(std::find(r.only_in_family.begin(), r.only_in_family.end(), LengthSet::interval(2, 4)) !=
              r.only_in_family.end());
}
