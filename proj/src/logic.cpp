#include "qadm/logic.hpp"

#include <stdexcept>
#include <string>

#include "qadm/admissibility.hpp"
#include "qadm/errors.hpp"
#include "qadm/kernels.hpp"
#include "qadm/program.hpp"
#include "qadm/validity.hpp"

namespace qadm {

std::vector<Element> Logic::designated_elements() const {
  std::vector<Element> out;
  for (Element e = 0; e < designated.size(); ++e)
    if (designated[e]) out.push_back(e);
  return out;
}

Logic make_logic(FiniteAlgebra algebra, std::span<const Element> designated) {
  std::vector<char> flags(algebra.size(), 0);
  for (Element e : designated) {
    if (e >= algebra.size())
      throw std::invalid_argument("designated value " + std::to_string(e) + " is outside '" + algebra.name() + "'");
    flags[e] = 1;
  }
  return {std::move(algebra), std::move(flags)};
}

bool consequence(const Logic& logic, const Rule& rule, const Limits& limits) {
  const Signature& sig = logic.algebra.signature();
  for (const auto& t : rule.premises) check_term_signature(sig, t);
  check_term_signature(sig, rule.conclusion);
  const auto program = ClauseProgram::from_rule(rule);
  const std::uint64_t total = checked_power(logic.algebra.size(), program.variable_count());
  if (total > limits.assignment_budget) throw ResourceLimitError("assignment budget", limits.assignment_budget, total);
  return !kernels::parallel::first_failure(program, logic.algebra, logic.designated);
}

Logic logic_over_free(const Logic& logic, const FreeAlgebra& free) {
  if (free.family().size() != 1 || !free.family()[0].same_tables(logic.algebra))
    throw std::invalid_argument("free algebra is not over the logic's algebra");
  std::vector<char> flags(free.size(), 0);
  for (Element e = 0; e < free.size(); ++e) {
    bool all = true;
    for (auto c : free.coordinates(e))
      if (!logic.designated[c]) {
        all = false;
        break;
      }
    flags[e] = all;
  }
  return {free.base(), std::move(flags)};
}

Logic free_logic(const Logic& logic, std::size_t m, const Limits& limits) {
  return logic_over_free(logic, free_algebra(std::span(&logic.algebra, 1), m, limits));
}

Logic logic_star(const Logic& logic, const Limits& limits) {
  return free_logic(logic, logic.algebra.size(), limits);
}

namespace {

std::size_t first_rank(const FiniteAlgebra& a) {
  const std::size_t m0 = a.signature().has_constants() ? 0 : 1;
  return std::max(m0, generating_number(a));
}

Logic restrict_logic(const Logic& host, const SubPreHomResult& r) {
  std::vector<char> flags(r.subuniverse.size());
  for (std::size_t i = 0; i < r.subuniverse.size(); ++i) flags[i] = host.designated[r.subuniverse[i]];
  return {r.algebra, std::move(flags)};
}

}  // namespace

ReducedLogic reduced_logic(const Logic& logic, const Limits& limits) {
  const FiniteAlgebra& a = logic.algebra;
  const std::size_t start = first_rank(a);
  const std::size_t last = std::max(start, a.size());
  std::optional<ReducedLogic> best;
  for (std::size_t m = start; m <= last; ++m) {
    std::optional<FreeAlgebra> free;
    try {
      free.emplace(free_algebra(std::span(&a, 1), m, limits));
    } catch (const ResourceLimitError&) {
      if (!best) throw;
      break;
    }
    Logic host = logic_over_free(logic, *free);
    PairFilter keeps_designation = [&](Element in_b, Element in_a) {
      return !host.designated[in_b] || logic.designated[in_a];
    };
    if (!best) {
      auto r = sub_pre_hom_search(a, free->base(), keeps_designation, limits);
      best = ReducedLogic{restrict_logic(host, r), m, free->size(), r.subuniverse, std::move(r.onto), m};
    } else {
      best->largest_rank_tried = m;
      const std::size_t bound = best->logic.algebra.size() - 1;
      if (auto r = find_sub_pre_hom(a, free->base(), keeps_designation, bound, limits))
        *best = ReducedLogic{restrict_logic(host, *r), m, free->size(), r->subuniverse, std::move(r->onto), m};
    }
    if (best->logic.algebra.size() == a.size()) break;
  }
  return std::move(*best);
}

Logic largest_free_logic(const Logic& logic, const Limits& limits) {
  const std::size_t start = first_rank(logic.algebra);
  for (std::size_t m = std::max(start, logic.algebra.size());; --m) {
    try {
      return free_logic(logic, m, limits);
    } catch (const ResourceLimitError&) {
      if (m == start) throw;
    }
  }
}

bool rule_admissible(const Logic& logic, const Rule& rule, LogicRoute route, const Limits& limits) {
  if (route == LogicRoute::star) return consequence(largest_free_logic(logic, limits), rule, limits);
  return consequence(reduced_logic(logic, limits).logic, rule, limits);
}

}  // namespace qadm
