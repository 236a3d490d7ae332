#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/limits.hpp"
#include "qadm/partition.hpp"

namespace qadm {

// Direct product; element (e_1,...,e_n) has index e_1*|A_2|*...*|A_n| + ... + e_n.
FiniteAlgebra product(std::span<const FiniteAlgebra> algs, const Limits& limits = default_limits());

// Tuple of component elements for a product element index.
std::vector<Element> product_components(std::span<const FiniteAlgebra> algs, Element e);

// A/theta with blocks ordered by least representative, plus a -> a/theta.
// Throws std::invalid_argument if theta is not a congruence.
std::pair<FiniteAlgebra, ElementMap> quotient(const FiniteAlgebra& alg, const Partition& theta);

// Subalgebra generated by seed and the constants, in discovery order, plus
// the inclusion map into alg.
std::pair<FiniteAlgebra, ElementMap> generated_subalgebra(const FiniteAlgebra& alg,
                                                          std::span<const Element> seed);

// Restriction of alg to a subuniverse listed in the given order.
FiniteAlgebra restrict_to(const FiniteAlgebra& alg, std::span<const Element> subuniverse);

// The constant-generated subalgebra when constants exist, otherwise a
// smallest one-generated subalgebra (least generator on ties).
FiniteAlgebra minimal_subalgebra(const FiniteAlgebra& alg);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const ElementMap& h);

// Subuniverse closure over a fixed algebra, reusable across many calls.
// Elements already in the prefix members[0, closed_prefix) are assumed closed.
class SubuniverseCloser {
 public:
  explicit SubuniverseCloser(const FiniteAlgebra& alg);

  // Extends members to the subuniverse it generates, in discovery order.
  // Returns false (leaving members partially extended) as soon as the size
  // would exceed limit.
  bool close(std::vector<Element>& members, std::size_t closed_prefix, std::size_t limit);

  bool contains(Element e) const { return mark_[e] == epoch_; }

 private:
  const FiniteAlgebra& alg_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<std::size_t> nonconstant_ops_;
  std::vector<std::size_t> constant_ops_;
  std::vector<Element> args_;
};

}  // namespace qadm
