#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/partition.hpp"

namespace qadm {

// Sorted multiset of algebra cardinalities.
using CardMultiset = std::vector<std::size_t>;

CardMultiset card_multiset(std::span<const FiniteAlgebra> algs);
// Dershowitz-Manna: every x occurring more often in m1 is dominated by some
// y > x occurring more often in m2.
bool multiset_leq(const CardMultiset& m1, const CardMultiset& m2);

// Embedding tests memoized by the canonical codes of both sides.
class EmbeddingCache {
 public:
  bool embeds(const FiniteAlgebra& a, const std::string& code_a, const FiniteAlgebra& b, const std::string& code_b);
  bool embeds(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  std::map<std::pair<std::string, std::string>, bool> results_;
};

// Meet of the non-trivial congruences whose quotient embeds into a member of
// family differs from Delta. One-element algebras are never irreducible.
bool is_q_subdirectly_irreducible(const FiniteAlgebra& alg, std::span<const FiniteAlgebra> family);

// One decomposition performed by the generating-set reduction: `replaced`
// was removed; its quotients by `covering` separate points, and `added`
// lists the quotients put back into the working list.
struct MinGenStep {
  FiniteAlgebra replaced;
  std::vector<Partition> covering;
  std::vector<FiniteAlgebra> added;
};

struct MinGenResult {
  std::vector<FiniteAlgebra> algebras;
  // Index into the input family of the algebra each result descends from.
  std::vector<std::size_t> origin;
  std::vector<MinGenStep> steps;
};

// Minimal generating set of the quasivariety generated by family. Trivial
// algebras are dropped, so an empty result means the trivial quasivariety.
MinGenResult min_gen_set_traced(std::span<const FiniteAlgebra> family);
std::vector<FiniteAlgebra> min_gen_set(std::span<const FiniteAlgebra> family);

// Sorted canonical codes; two sets of algebras agree member-wise up to
// isomorphism iff their code lists are equal.
std::vector<std::string> canonical_codes(std::span<const FiniteAlgebra> algs);
bool same_up_to_isomorphism(std::span<const FiniteAlgebra> a, std::span<const FiniteAlgebra> b);

}  // namespace qadm
