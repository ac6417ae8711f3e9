#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "zerolen/atoms.hpp"

using namespace zerolen;

namespace {
std::set<oracle::Counts> as_set(const std::vector<Sequence>& v) {
  std::set<oracle::Counts> out;
  for (const auto& s : v) out.insert(s.counts());
  return out;
}
}  // namespace

TEST(Atoms, CatalogMatchesBruteForce) {
  for (const auto& g : {make_group({2}), make_group({3}), make_group({4}), make_group({2, 2}), make_group({5}),
                        make_group({6}), make_group({2, 2, 2}), make_group({2, 4}), make_group({8}), make_group({3, 3})}) {
    const auto cat = enumerate_atoms(g);
    const auto want = oracle::atoms(g, nonzero_elements(g));
    EXPECT_EQ(as_set(cat.atoms), std::set<oracle::Counts>(want.begin(), want.end())) << g.name();
    EXPECT_EQ(cat.atoms.size(), want.size()) << g.name();
    EXPECT_EQ(cat.davenport, oracle::davenport(g)) << g.name();
  }
}

TEST(Atoms, SubsetCatalogMatchesBruteForce) {
  const auto g = make_group({2, 4});
  for (std::uint32_t mask = 1; mask < (1u << 7); mask += 5) {
    std::vector<Element> sub;
    for (int i = 0; i < 7; ++i)
      if (mask >> i & 1) sub.push_back(i + 1);
    const auto want = oracle::atoms(g, sub);
    EXPECT_EQ(as_set(enumerate_atoms(g, sub).atoms), std::set<oracle::Counts>(want.begin(), want.end()));
  }
}

TEST(Atoms, DavenportConstants) {
  EXPECT_EQ(davenport_constant(make_group({5})), 5);
  EXPECT_EQ(davenport_constant(make_group({2, 4})), 5);
  EXPECT_EQ(davenport_constant(make_group({3, 3})), 5);
  EXPECT_EQ(davenport_constant(make_group({2, 2, 2, 2})), 5);
  EXPECT_EQ(davenport_constant(make_group({3})), 3);
  EXPECT_EQ(davenport_constant(make_group({2, 2})), 3);
  EXPECT_EQ(davenport_constant(make_group({4})), 4);
  EXPECT_EQ(davenport_constant(make_group({2, 2, 2})), 4);
  EXPECT_EQ(davenport_constant(make_group({})), 1);
}

TEST(Atoms, CountsOverC2C4) {
  const auto cat = enumerate_atoms(make_group({2, 4}));
  // 0 is excluded by default: lengths 2..5
  EXPECT_EQ(cat.counts_by_length(), (std::map<int, int>{{2, 5}, {3, 9}, {4, 16}, {5, 8}}));
  EXPECT_EQ(cat.atoms.size(), 38u);
}

TEST(Atoms, SingleGenerator) {
  const auto g = make_group({5});
  const std::vector<Element> sub{1};
  const auto cat = enumerate_atoms(g, sub);
  ASSERT_EQ(cat.atoms.size(), 1u);
  EXPECT_EQ(cat.atoms[0], Sequence::of(g, {{1, 5}}));
}

TEST(Atoms, ThreadCountDoesNotChangeCatalog) {
  const auto g = make_group({2, 2, 2, 2});
  const auto one = enumerate_atoms(g, 1);
  const auto four = enumerate_atoms(g, 4);
  EXPECT_EQ(one.atoms, four.atoms);
}

TEST(Atoms, C2C4Classification) {
  const auto cat = enumerate_atoms(make_group({2, 4}));
  const auto rep = check_classification_c2c4(cat);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.total, 38);
  std::vector<int> sizes;
  for (const auto& [name, n] : rep.class_sizes) sizes.push_back(n);
  EXPECT_EQ(sizes, (std::vector<int>{2, 1, 2, 1, 4, 4, 4, 4, 4, 4, 8}));
  const auto& g = cat.group;
  const auto classes = c2c4_atom_classes(g, rep.e, rep.g);
  // the second length-3 class is the single atom e (2g) (e+2g)
  const auto& s31 = classes[3];
  ASSERT_EQ(s31.second.size(), 1u);
  const Element g2 = g.add(rep.g, rep.g);
  EXPECT_EQ(s31.second[0], Sequence::of(g, {{rep.e, 1}, {g2, 1}, {g.add(rep.e, g2), 1}}));
  EXPECT_THROW(check_classification_c2c4(enumerate_atoms(make_group({8}))), DomainError);
}

TEST(Atoms, HalfFactorial) {
  const auto c2c4 = make_group({2, 4});
  const Element e = c2c4.element({1, 0}), g = c2c4.element({0, 1});
  const std::vector<Element> hf{0, g, c2c4.add(g, g), c2c4.add(e, g), c2c4.add(e, c2c4.add(g, g))};
  EXPECT_TRUE(is_half_factorial(c2c4, hf));
  const auto c5 = make_group({5});
  const std::vector<Element> g_2g{1, 2};
  EXPECT_FALSE(is_half_factorial(c5, g_2g));
  for (Element x = 1; x < c2c4.order(); ++x) {
    const std::vector<Element> single{x};
    EXPECT_TRUE(is_half_factorial(c2c4, single));
  }
  EXPECT_EQ(extract_half_factorial_subset(c5, g_2g), (std::vector<Element>{1}));
  EXPECT_THROW(extract_half_factorial_subset(c2c4, hf), DomainError);
  const auto all = nonzero_elements(c2c4);
  EXPECT_EQ(extract_half_factorial_subset(c2c4, all).size(), 1u);
  const auto c33 = make_group({3, 3});
  const auto sub = extract_half_factorial_subset(c33, nonzero_elements(c33));
  EXPECT_FALSE(sub.empty());
  EXPECT_TRUE(is_half_factorial(c33, sub));
}
