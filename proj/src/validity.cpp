#include "qadm/validity.hpp"

#include "qadm/errors.hpp"
#include "qadm/kernels.hpp"
#include "qadm/program.hpp"

namespace qadm {

void check_term_signature(const Signature& sig, const Term& t) {
  if (t.is_variable()) return;
  if (t.op() >= sig.size() || sig[t.op()].name != t.name() || sig[t.op()].arity != t.args().size())
    throw SignatureMismatch("term symbol '" + t.name() + "' is not in the algebra's signature");
  for (const auto& a : t.args()) check_term_signature(sig, a);
}

namespace {

void check_clause(const Signature& sig, const Clause& c) {
  for (const auto* side : {&c.premises, &c.conclusions})
    for (const auto& e : *side) {
      check_term_signature(sig, e.lhs);
      check_term_signature(sig, e.rhs);
    }
}

}  // namespace

ValidityResult check_valid_detailed(std::span<const FiniteAlgebra> family, const Clause& clause,
                                    const Limits& limits) {
  const auto program = ClauseProgram::from_clause(clause);
  std::uint64_t total = 0;
  for (const auto& a : family) {
    require_same_signature(family[0].signature(), a.signature());
    check_clause(a.signature(), clause);
    total += checked_power(a.size(), program.variable_count());
  }
  if (total > limits.assignment_budget) throw ResourceLimitError("assignment budget", limits.assignment_budget, total);
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto hit = kernels::parallel::first_failure(program, family[i], {});
    if (!hit) continue;
    Countermodel cm{i, {}};
    std::uint64_t index = *hit;
    const std::size_t k = family[i].size();
    cm.assignment.resize(program.variable_count());
    for (std::size_t v = program.variable_count(); v-- > 0;) {
      cm.assignment[v] = {program.variables()[v], static_cast<Element>(index % k)};
      index /= k;
    }
    return {false, std::move(cm)};
  }
  return {};
}

bool check_valid(std::span<const FiniteAlgebra> family, const Clause& clause, const Limits& limits) {
  return check_valid_detailed(family, clause, limits).valid;
}

bool check_satisfiable(const FiniteAlgebra& alg, std::span<const Equation> equations, const Limits& limits) {
  Clause negative{{equations.begin(), equations.end()}, {}};
  return !check_valid(std::span(&alg, 1), negative, limits);
}

}  // namespace qadm
