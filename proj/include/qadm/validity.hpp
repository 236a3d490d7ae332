#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/limits.hpp"
#include "qadm/term.hpp"

namespace qadm {

struct Countermodel {
  std::size_t algebra;  // index into the checked family
  std::vector<std::pair<std::string, Element>> assignment;
};

struct ValidityResult {
  bool valid = true;
  std::optional<Countermodel> countermodel;
};

// Throws SignatureMismatch for a symbol missing from sig or used at the wrong arity.
void check_term_signature(const Signature& sig, const Term& t);

// Exhaustive check over every member and every assignment, lexicographic over
// the sorted variable list. Throws ResourceLimitError("assignment budget")
// when the total assignment count exceeds limits.assignment_budget.
ValidityResult check_valid_detailed(std::span<const FiniteAlgebra> family, const Clause& clause,
                                    const Limits& limits = default_limits());
bool check_valid(std::span<const FiniteAlgebra> family, const Clause& clause, const Limits& limits = default_limits());

// Some assignment makes every equation hold.
bool check_satisfiable(const FiniteAlgebra& alg, std::span<const Equation> equations,
                       const Limits& limits = default_limits());

}  // namespace qadm
