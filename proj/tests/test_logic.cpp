#include <gtest/gtest.h>

#include "qadm/errors.hpp"
#include "qadm/logic.hpp"
#include "qadm/structure.hpp"
#include "support.hpp"

using namespace qadm;
using qadm::test::load_one;

namespace {

Logic lukasiewicz() {
  const std::vector<Element> d{2};
  return make_logic(load_one("l3.alg"), d);
}

Logic j3() {
  const std::vector<Element> d{1, 2};
  return make_logic(load_one("l3.alg"), d);
}

}  // namespace

TEST(Logic, ModusPonensAndDesignation) {
  auto l = lukasiewicz();
  const auto& sig = l.algebra.signature();
  EXPECT_TRUE(consequence(l, parse_rule("x, imp(x,y) / y", sig)));
  EXPECT_TRUE(consequence(l, parse_rule("/ imp(x,x)", sig)));
  EXPECT_FALSE(consequence(l, parse_rule("/ x", sig)));
  auto j = j3();
  EXPECT_FALSE(consequence(j, parse_rule("x, imp(x,y) / y", sig)));
  EXPECT_EQ(j.designated_elements(), (std::vector<Element>{1, 2}));
  const std::vector<Element> bad{3};
  EXPECT_THROW(make_logic(load_one("l3.alg"), bad), std::invalid_argument);
}

TEST(Logic, DesignatedStarHoldsValidTerms) {
  auto l = lukasiewicz();
  auto f = free_algebra(std::span(&l.algebra, 1), 1);
  auto star = logic_over_free(l, f);
  std::size_t count = 0;
  for (Element e = 0; e < f.size(); ++e) {
    bool valid = consequence(l, Rule{{}, f.witness(e)});
    EXPECT_EQ(static_cast<bool>(star.designated[e]), valid);
    count += valid;
  }
  EXPECT_EQ(count, 1u);
}

TEST(Logic, ReducedLogicExamples) {
  auto r = reduced_logic(lukasiewicz());
  EXPECT_EQ(r.logic.algebra.size(), 6u);
  EXPECT_EQ(r.logic.designated_elements().size(), 1u);
  EXPECT_TRUE(is_homomorphism(r.logic.algebra, load_one("l3.alg"), r.onto));
  auto rj = reduced_logic(j3());
  EXPECT_EQ(rj.logic.algebra.size(), 6u);
  EXPECT_EQ(rj.logic.designated_elements().size(), 2u);
  for (Element e = 0; e < rj.logic.algebra.size(); ++e)
    if (rj.logic.designated[e]) EXPECT_GE(rj.onto(e), 1u);
}

TEST(Logic, TrivialAlgebra) {
  const std::vector<Element> d{0};
  auto t = make_logic(load_one("trivial.alg"), d);
  auto r = reduced_logic(t);
  EXPECT_EQ(r.logic.algebra.size(), 1u);
  const std::vector<Element> none;
  auto empty = make_logic(load_one("trivial.alg"), none);
  EXPECT_TRUE(consequence(empty, parse_rule("x / y", empty.algebra.signature())));
}

TEST(Logic, RuleAdmissibilityRoutes) {
  auto l = lukasiewicz();
  const auto& sig = l.algebra.signature();
  for (const char* text : {"x, imp(x,y) / y", "imp(x, neg(x)), imp(neg(x), x) / y", "x / y", "neg(imp(x,x)) / y"}) {
    auto rule = parse_rule(text, sig);
    EXPECT_EQ(rule_admissible(l, rule, LogicRoute::reduced), rule_admissible(l, rule, LogicRoute::star)) << text;
  }
  auto rule = parse_rule("imp(x, neg(x)), imp(neg(x), x) / y", sig);
  EXPECT_FALSE(consequence(l, rule));
  EXPECT_TRUE(rule_admissible(l, rule));
}

TEST(Logic, StarIsCappedForL3) {
  Limits tight;
  tight.max_free_entries = 1000;
  EXPECT_THROW(logic_star(lukasiewicz(), tight), ResourceLimitError);
}
