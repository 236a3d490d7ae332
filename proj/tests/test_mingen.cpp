#include <gtest/gtest.h>

#include "qadm/admissibility.hpp"
#include "qadm/free_algebra.hpp"
#include "qadm/homomorphism.hpp"
#include "qadm/mingen.hpp"
#include "qadm/structure.hpp"
#include "support.hpp"

using namespace qadm;
using qadm::test::load;
using qadm::test::load_one;

TEST(Multiset, DershowitzMannaExamples) {
  EXPECT_TRUE(multiset_leq({3, 4}, {3, 4}));
  EXPECT_TRUE(multiset_leq({3, 3}, {4}));
  EXPECT_FALSE(multiset_leq({4}, {3, 3}));
  EXPECT_TRUE(multiset_leq(CardMultiset(100, 3), {4}));
  EXPECT_TRUE(multiset_leq({}, {1}));
}

TEST(MinGen, QSubdirectIrreducibility) {
  auto p = load_one("p.alg");
  EXPECT_FALSE(is_q_subdirectly_irreducible(p, std::span(&p, 1)));
  auto t = load_one("trivial.alg");
  EXPECT_FALSE(is_q_subdirectly_irreducible(t, std::span(&t, 1)));
  auto b = load_one("boolean2.alg");
  EXPECT_TRUE(is_q_subdirectly_irreducible(b, std::span(&b, 1)));
}

TEST(MinGen, PaperExamples) {
  auto p = load_one("p.alg");
  auto gens = min_gen_set(std::span(&p, 1));
  ASSERT_EQ(gens.size(), 1u);
  auto f1 = free_algebra(std::span(&p, 1), 1);
  EXPECT_TRUE(are_isomorphic(gens[0], f1.base()));
  auto t = load_one("trivial.alg");
  EXPECT_TRUE(min_gen_set(std::span(&t, 1)).empty());
  auto l3 = load_one("l3.alg");
  auto l3gens = min_gen_set(std::span(&l3, 1));
  ASSERT_EQ(l3gens.size(), 1u);
  EXPECT_TRUE(are_isomorphic(l3gens[0], l3));
}

TEST(MinGen, GeneratesTheSameQuasivariety) {
  for (const char* name : {"p.alg", "groupoids.alg", "c2e_c3e.alg", "d4.alg", "z4.alg"}) {
    auto p = load(name);
    auto gens = min_gen_set(p.algebras);
    for (const auto& g : gens) EXPECT_TRUE(in_isp(g, p.algebras)) << name;
    for (const auto& a : p.algebras) EXPECT_TRUE(in_isp(a, gens)) << name;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j) EXPECT_FALSE(embeds(gens[i], gens[j])) << name;
  }
}

TEST(MinGen, OrderIndependentUpToIsomorphism) {
  auto p = load("groupoids.alg");
  auto forward = min_gen_set(p.algebras);
  std::vector<FiniteAlgebra> reversed(p.algebras.rbegin(), p.algebras.rend());
  EXPECT_TRUE(same_up_to_isomorphism(forward, min_gen_set(reversed)));
}

TEST(MinGen, ProductsDecompose) {
  std::vector<FiniteAlgebra> pair{load_one("l3.alg"), load_one("l3.alg")};
  auto square = product(pair);
  auto gens = min_gen_set(std::span(&square, 1));
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_TRUE(are_isomorphic(gens[0], pair[0]));
}
