#include <gtest/gtest.h>

#include <set>

#include "qadm/errors.hpp"
#include "qadm/free_algebra.hpp"
#include "qadm/structure.hpp"
#include "support.hpp"

using namespace qadm;
using qadm::test::load;
using qadm::test::load_one;

TEST(Free, SmallSizesMatchNaiveClosure) {
  struct Case {
    const char* file;
    std::size_t n;
  };
  for (auto c : {Case{"l3.alg", 1}, Case{"b1.alg", 1}, Case{"c3.alg", 1}, Case{"p.alg", 1}, Case{"p.alg", 2},
                 Case{"g3plus.alg", 2}, Case{"boolean2.alg", 1}, Case{"c2e_c3e.alg", 1}, Case{"b2.alg", 1},
                 Case{"groupoids.alg", 2}}) {
    auto p = load(c.file);
    EXPECT_EQ(free_size(p.algebras, c.n), test::naive_free_size(p.algebras, c.n)) << c.file << " n=" << c.n;
  }
}

TEST(Free, KnownSizes) {
  auto l3 = load_one("l3.alg");
  EXPECT_EQ(free_size(std::span(&l3, 1), 1), 12u);
  auto t = load_one("trivial.alg");
  EXPECT_EQ(free_size(std::span(&t, 1), 3), 1u);
  auto d4 = load_one("d4.alg");
  EXPECT_EQ(free_size(std::span(&d4, 1), 2), 168u);
  auto m5 = load_one("m5.alg");
  EXPECT_EQ(free_size(std::span(&m5, 1), 3), 28u);
  auto ce = load("c2e_c3e.alg");
  EXPECT_EQ(free_size(ce.algebras, 1), 16u);
  auto b = load_one("boolean2.alg");
  EXPECT_EQ(free_size(std::span(&b, 1), 1), 4u);
}

TEST(Free, WitnessesAndCoordinates) {
  auto s3 = load_one("s3.alg");
  auto f = free_algebra(std::span(&s3, 1), 2);
  ASSERT_EQ(f.size(), 264u);
  std::set<std::vector<std::uint16_t>> seen;
  for (Element e = 0; e < f.size(); ++e) {
    auto c = f.coordinates(e);
    EXPECT_TRUE(seen.emplace(c.begin(), c.end()).second);
    auto w = f.witness(e);
    std::map<std::string, Element> gens{{"x1", f.generators()[0]}, {"x2", f.generators()[1]}};
    std::map<std::string, Element> asg;
    for (const auto& v : w.variables()) asg[v] = gens.at(v);
    EXPECT_EQ(eval_term(f.base(), w, asg), e);
    // The coordinate at assignment (a, b) is the witness evaluated there.
    for (Element a = 0; a < 3; ++a)
      for (Element b = 0; b < 3; ++b) {
        std::map<std::string, Element> in_s3;
        for (const auto& v : w.variables()) in_s3[v] = v == "x1" ? a : b;
        EXPECT_EQ(eval_term(s3, w, in_s3), c[a * 3 + b]);
      }
  }
  EXPECT_LE(f.size(), free_size_bound(std::span(&s3, 1), 2));
}

TEST(Free, ProjectionsAreHomomorphisms) {
  auto p = load("c2e_c3e.alg");
  auto f = free_algebra(p.algebras, 1);
  for (std::size_t m = 0; m < p.algebras.size(); ++m)
    for (std::uint64_t a = 0; a < p.algebras[m].size(); ++a)
      EXPECT_TRUE(is_homomorphism(f.base(), p.algebras[m], f.projection(m, a)));
}

TEST(Free, CapsAndArguments) {
  auto l3 = load_one("l3.alg");
  Limits tight;
  tight.max_free_entries = 100;
  try {
    free_algebra(std::span(&l3, 1), 2, tight);
    FAIL() << "expected the cap to trip";
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.cap(), "free algebra coordinates");
    EXPECT_GT(e.attained(), 100u);
  }
  EXPECT_THROW(free_algebra(std::span(&l3, 1), 0), std::invalid_argument);
  EXPECT_THROW(free_algebra(std::span<const FiniteAlgebra>{}, 1), std::invalid_argument);
  auto d4 = load_one("d4.alg");
  EXPECT_EQ(free_size(std::span(&d4, 1), 0), 2u);
}
