#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qadm/census.hpp"
#include "qadm/homomorphism.hpp"
#include "qadm/structure.hpp"
#include "support.hpp"

using namespace qadm;
using qadm::test::load_one;

namespace {

struct BruteCounts {
  bool any = false, injective = false, surjective = false;
};

BruteCounts brute(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  BruteCounts c;
  test::for_each_map(a.size(), b.size(), [&](const std::vector<Element>& h) {
    if (!test::brute_is_homomorphism(a, b, h)) return;
    c.any = true;
    std::vector<char> hit(b.size(), 0);
    std::size_t distinct = 0;
    for (Element x : h) distinct += !hit[x]++;
    if (distinct == a.size()) c.injective = true;
    if (distinct == b.size()) c.surjective = true;
  });
  return c;
}

}  // namespace

TEST(Homomorphism, IdentityInEveryMode) {
  auto d4 = load_one("d4.alg");
  for (auto mode : {HomMode::any, HomMode::injective, HomMode::surjective}) {
    auto h = find_homomorphism(d4, d4, mode);
    ASSERT_TRUE(h);
    EXPECT_TRUE(is_homomorphism(d4, d4, *h));
  }
}

TEST(Homomorphism, NoSurjectionOntoLarger) {
  EXPECT_FALSE(find_homomorphism(load_one("l2.alg"), load_one("l3.alg"), HomMode::surjective));
}

TEST(Homomorphism, L3IsImageOfL3TimesL2) {
  std::vector<FiniteAlgebra> pair{load_one("l3.alg"), load_one("l2.alg")};
  auto p = product(pair);
  auto h = find_homomorphism(p, pair[0], HomMode::surjective);
  ASSERT_TRUE(h);
  EXPECT_TRUE(test::brute_is_homomorphism(p, pair[0], h->image));
}

TEST(Homomorphism, AgreesWithExhaustiveMapsOnSmallGroupoids) {
  auto classes = enumerate_groupoids(2, 2);
  auto threes = enumerate_groupoids(3, 2);
  std::vector<FiniteAlgebra> sample(classes.begin(), classes.end());
  for (std::size_t i = 0; i < threes.size(); i += 97) sample.push_back(threes[i]);
  for (const auto& a : sample)
    for (const auto& b : sample) {
      auto want = brute(a, b);
      EXPECT_EQ(bool(find_homomorphism(a, b, HomMode::any)), want.any) << a.name() << " " << b.name();
      EXPECT_EQ(bool(find_homomorphism(a, b, HomMode::injective)), want.injective) << a.name() << " " << b.name();
      EXPECT_EQ(bool(find_homomorphism(a, b, HomMode::surjective)), want.surjective) << a.name() << " " << b.name();
    }
}

TEST(Homomorphism, FilterRestrictsImages) {
  auto l3 = load_one("l3.alg");
  ImageFilter fixes_zero = [](Element a, Element b) { return a != 0 || b == 0; };
  auto h = find_homomorphism(l3, l3, HomMode::any, fixes_zero);
  ASSERT_TRUE(h);
  EXPECT_EQ((*h)(0), 0u);
  ImageFilter never = [](Element, Element) { return false; };
  EXPECT_FALSE(find_homomorphism(l3, l3, HomMode::any, never));
}

TEST(Canonical, RelabelingIsIsomorphic) {
  auto n5 = load_one("n5.alg");
  // Swap the chain a < b with c.
  auto r = relabel(n5, ElementMap{{0, 3, 2, 1, 4}});
  EXPECT_TRUE(are_isomorphic(n5, r));
  EXPECT_EQ(canonical_code(n5), canonical_code(r));
  EXPECT_FALSE(are_isomorphic(n5, load_one("m5.alg")));
}

TEST(Canonical, InvariantUnderRandomPermutations) {
  std::mt19937 rng(5);
  for (const char* name : {"d4.alg", "z4plus.alg", "b2.alg", "s3.alg"}) {
    auto a = load_one(name);
    std::vector<Element> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 5; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      auto r = relabel(a, ElementMap{perm});
      EXPECT_TRUE(canonical_form(r).same_tables(canonical_form(a))) << name;
    }
  }
}

TEST(Canonical, GroupoidClassCount) {
  EXPECT_EQ(enumerate_groupoids(3, 2).size(), 3330u);
  EXPECT_EQ(enumerate_groupoids(1, 2).size(), 1u);
  EXPECT_EQ(enumerate_groupoids(2, 1).size(), 3u);
}
