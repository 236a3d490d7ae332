#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/partition.hpp"

namespace qadm {

using ElementPair = std::pair<Element, Element>;

// Least congruence containing all pairs.
Partition congruence_closure(const FiniteAlgebra& alg, std::span<const ElementPair> pairs);
// Least congruence containing an equivalence relation.
Partition congruence_closure(const FiniteAlgebra& alg, const Partition& equivalence);

bool is_congruence(const FiniteAlgebra& alg, const Partition& theta);

// Cg(a,b) for all a < b, deduplicated, in order of first appearance.
std::vector<Partition> principal_congruences(const FiniteAlgebra& alg);

// Con(A), sorted by decreasing block count then by labels (so Delta is first
// and nabla is last).
std::vector<Partition> all_congruences(const FiniteAlgebra& alg);

}  // namespace qadm
