#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "zerolen/families.hpp"
#include "zerolen/lengths.hpp"

using namespace zerolen;

namespace {

const LengthEngine& engine_for(const std::string& name) {
  static std::map<std::string, std::unique_ptr<LengthEngine>> engines;
  auto& e = engines[name];
  if (!e) e = std::make_unique<LengthEngine>(parse_group(name));
  return *e;
}

void expect_witness(const std::string& id, int y, int k, const std::string& group = "") {
  const FamilyDescriptor d{id, y, k};
  const auto& f = family_info(id);
  const auto gname = group.empty() ? f.groups.front() : group;
  const auto w = witness_sequence(d, parse_group(gname));
  EXPECT_EQ(engine_for(gname).length_set(w), family_member(d)) << d.str() << " over " << gname << ": " << w.str();
}

}  // namespace

TEST(Families, MemberExamples) {
  EXPECT_EQ(family_member({"T46-L6", 0, 0}), (LengthSet{3, 5, 6}));
  EXPECT_EQ(family_member({"T46-L2", 0, 0}), (LengthSet{2, 4}));
  EXPECT_EQ(family_member({"P33-C3C22", 0, 1}), LengthSet::interval(2, 3));
  EXPECT_EQ(family_member({"T46-L4", 0, 1}), (LengthSet{2, 5}));
  EXPECT_EQ(family_member({"T46-L6", 1, 1}), (LengthSet{6, 8, 9, 11, 12}));
}

TEST(Families, DomainErrors) {
  EXPECT_THROW(family_member({"T46-L2", 0, 1}), DomainError);
  EXPECT_THROW(family_member({"T46-L4", 0, 0}), DomainError);
  EXPECT_THROW(family_member({"T46-L5a", 0, 3}), DomainError);
  EXPECT_THROW(family_member({"T41a", 6, 1}), DomainError);
  EXPECT_THROW(family_member({"T41b", 3, 0}), DomainError);
  EXPECT_THROW(family_member({"T47-L2c", 1, 1}), DomainError);
  EXPECT_THROW(family_member({"P33-C3C22", -1, 0}), DomainError);
  EXPECT_THROW(family_member({"NOPE", 0, 0}), DomainError);
  EXPECT_THROW(witness_sequence({"T46-L4", 0, 1}, make_group({2, 4})), DomainError);
  try {
    family_member({"P33-C23b", 0, 2});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("k >= 3"), std::string::npos);
  }
}

TEST(Families, Match) {
  const auto c5 = make_group({5});
  EXPECT_EQ(match_family(c5, LengthSet{2, 4}), (std::vector<FamilyDescriptor>{{"T46-L2", 0, 0}}));
  const auto m = match_family(c5, LengthSet{2, 5});
  EXPECT_NE(std::find(m.begin(), m.end(), FamilyDescriptor{"T46-L4", 0, 1}), m.end());
  const auto c24 = make_group({2, 2, 2, 2});
  const auto m2 = match_family(c24, LengthSet::interval(4, 10));
  EXPECT_TRUE(std::any_of(m2.begin(), m2.end(), [](const FamilyDescriptor& d) { return d.id.rfind("T48-L3", 0) == 0; }));
  EXPECT_TRUE(match_family(make_group({2, 4}), LengthSet{2, 5}).empty());
  EXPECT_THROW(match_family(make_group({7}), LengthSet{2}), DomainError);
}

TEST(Families, IntervalCriterion) {
  EXPECT_FALSE(interval_criterion_c24(2, 5));
  EXPECT_TRUE(interval_criterion_c24(4, 10));
  EXPECT_FALSE(interval_criterion_c24(3, 8));
  EXPECT_TRUE(interval_criterion_c24(2, 4));
  EXPECT_THROW(interval_criterion_c24(1, 2), DomainError);
  for (int l1 = 2; l1 <= 10; ++l1)
    for (int l2 = l1; l2 <= 10; ++l2) {
      const auto w = c24_interval_witness(l1, l2);
      ASSERT_EQ(w.has_value(), interval_criterion_c24(l1, l2)) << l1 << "," << l2;
      if (w) {
        EXPECT_EQ(engine_for("C2xC2xC2xC2").length_set(*w), LengthSet::interval(l1, l2));
      }
    }
}

TEST(Families, WitnessExamples) {
  const auto c5 = make_group({5});
  EXPECT_EQ(witness_sequence({"T46-L4", 0, 1}), parse_sequence(c5, "1^5*4^5"));
  const auto c2c4 = make_group({2, 4});
  const auto u = parse_sequence(c2c4, "(1,0)*(0,1)^3*(1,1)");
  const auto w = witness_sequence({"T47-L4", 0, 1});
  EXPECT_EQ(engine_for("C2xC4").length_set(w), (LengthSet{2, 4, 5}));
  EXPECT_EQ(engine_for("C2xC4").length_set(u * negate(u)), (LengthSet{2, 4, 5}));
  const auto u2 = witness_sequence({"T48-L2", 0, 1});
  EXPECT_EQ(u2.size(), 10);
  EXPECT_EQ(engine_for("C2xC2xC2xC2").length_set(u2), (LengthSet{2, 5}));
}

TEST(Families, CompletenessSmallParameters) {
  // every row and group, y <= 4, k <= 3 (rows with a joint (y,k) domain: all admissible y)
  std::size_t n = 0;
  for (const auto& f : family_table()) {
    for (const auto& g : f.groups) {
      const int ymax = f.uses_y ? (f.yk_ok ? 17 : 4) : 0;
      for (int y = 0; y <= ymax; ++y)
        for (int k = 0; k <= (f.uses_k ? 3 : 0); ++k) {
          if (!in_domain(f, y, k)) continue;
          expect_witness(f.id, y, k, g);
          ++n;
        }
    }
  }
  EXPECT_GT(n, 300u);
}

TEST(Families, LargerParameters) {
  for (int k = 3; k <= 5; ++k) expect_witness("P33-C23b", 0, k);
  for (int k = 6; k <= 9; ++k) expect_witness("T48-L3b", 0, k);
  for (int k = 5; k <= 8; ++k) expect_witness("T48-L6", 0, k);
  for (int k = 4; k <= 6; ++k) expect_witness("T41a", 2 * k + 1, k);
  for (int k = 4; k <= 5; ++k) expect_witness("T46-L5a", 1, k);
}

TEST(Families, C33EndpointRowsCoverEveryInterval) {
  // [a,b] with a >= 2 and 2b <= 5a, b <= 12
  const auto& eng = engine_for("C3xC3");
  for (int a = 2; a <= 12; ++a)
    for (int b = a; b <= 12 && 2 * b <= 5 * a; ++b) {
      const auto l = LengthSet::interval(a, b);
      EXPECT_FALSE(match_family(make_group({3, 3}), l).empty()) << l.str();
      EXPECT_EQ(eng.length_set(detail::c33_interval(a, b)), l) << a << "," << b;
    }
}

TEST(Families, L8bPrintedConstructionDiffers) {
  // the printed construction U^(2k+3) V e4^2 e0^2 does not give the member;
  // U^(2k+3) V does
  detail::C24 c;
  const auto& eng = engine_for("C2xC2xC2xC2");
  const auto printed = c.U().power(3) * c.V() * c.e4e0_sq();
  EXPECT_EQ(eng.length_set(printed), (LengthSet{5, 6, 8, 9, 11}));
  EXPECT_NE(eng.length_set(printed), family_member({"T48-L8b", 0, 0}));
  EXPECT_EQ(family_member({"T48-L8b", 0, 0}), (LengthSet{4, 6, 7, 9}));
  EXPECT_EQ(eng.length_set(c.U().power(3) * c.V()), family_member({"T48-L8b", 0, 0}));
}

TEST(Families, Presentations) {
  for (const char* id : {"T41", "T47-L2", "T48-L3", "SELF"}) {
    const auto r = presentation_equivalence_check(presentation_pair(id), 30);
    EXPECT_TRUE(r.equal) << id << ": " << r.only_first.size() << " / " << r.only_second.size();
    EXPECT_GT(r.count, 100u);
  }
  EXPECT_THROW(presentation_pair("T99"), DomainError);
}

TEST(Families, C5SetsOutsideTheFamilies) {
  // {4,6,7,9} is a set of lengths over C5 (naive factorizer) yet matches no row
  const auto g = make_group({5});
  const auto b = parse_sequence(g, "2^8*3^10*4");
  const auto naive = oracle::lengths(g, b.counts());
  EXPECT_EQ(naive, (std::set<int>{4, 6, 7, 9}));
  EXPECT_EQ(engine_for("C5").length_set(b), (LengthSet{4, 6, 7, 9}));
  EXPECT_TRUE(match_family(g, LengthSet{4, 6, 7, 9}).empty());
  const auto b2 = parse_sequence(g, "2^10*3^7*4");
  EXPECT_EQ(engine_for("C5").length_set(b2), (LengthSet{4, 5, 7, 8}));
  EXPECT_TRUE(match_family(g, LengthSet{4, 5, 7, 8}).empty());
}
