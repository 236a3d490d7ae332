#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/free_algebra.hpp"
#include "qadm/limits.hpp"
#include "qadm/term.hpp"

namespace qadm {

// Size of a smallest set of elements that, together with the constants,
// generates alg.
std::size_t generating_number(const FiniteAlgebra& alg);

struct FreeCover {
  FreeAlgebra free;
  ElementMap onto;  // surjective homomorphism free.base() -> A
};

// Smallest F_D(m) having A as a homomorphic image, starting from m = 0 with
// constants and m = 1 otherwise. Throws std::invalid_argument when no m <= |A|
// works (A is then outside the variety of D).
FreeCover free_with_hom_onto(const FiniteAlgebra& a, std::span<const FiniteAlgebra> family,
                             const Limits& limits = default_limits());

// Restriction on the surjection B' -> A, in terms of elements of B.
using PairFilter = std::function<bool(Element in_b, Element in_a)>;

struct SubPreHomResult {
  FiniteAlgebra algebra;           // B' (or B itself)
  std::vector<Element> subuniverse;  // B' as elements of B, in generation order
  ElementMap onto;                 // surjection B' -> A
  bool proper = false;
};

// Smallest subalgebra B' of B with a surjective homomorphism onto A (subject
// to the filter), searched over subalgebras generated by at most
// generating_number(A) elements under a growing size bound; ties go to the
// first seed in lexicographic order. Returns B itself when no proper one
// exists; throws std::invalid_argument if B does not map onto A either.
SubPreHomResult sub_pre_hom_search(const FiniteAlgebra& a, const FiniteAlgebra& b, const PairFilter& filter = {},
                                   const Limits& limits = default_limits());
// Proper subalgebra search alone, restricted to |B'| <= max_size.
std::optional<SubPreHomResult> find_sub_pre_hom(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                                const PairFilter& filter, std::size_t max_size,
                                                const Limits& limits = default_limits());
FiniteAlgebra sub_pre_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const Limits& limits = default_limits());

struct BasisProvenance {
  std::size_t source = 0;            // index into the generating set
  std::size_t generators = 0;        // m of F_D(m)
  std::vector<std::size_t> chain;    // |F_D(m)| followed by each reduction's size
};

struct AdmissibilityBasis {
  std::vector<FiniteAlgebra> generating;  // minimal generating set of the input
  std::vector<FiniteAlgebra> basis;
  std::vector<BasisProvenance> provenance;  // one per basis algebra
  std::vector<std::size_t> free_sizes;      // |F_D(m)| per generating algebra
  std::vector<std::size_t> reduced_sizes;   // fixpoint size per generating algebra
};

AdmissibilityBasis adm_algs(std::span<const FiniteAlgebra> family, const Limits& limits = default_limits());

// C lies in ISP(family): the congruences of C with quotient embeddable into
// a member meet to Delta.
bool in_isp(const FiniteAlgebra& c, std::span<const FiniteAlgebra> family);

// The smallest subalgebra of F_K(1), or F_K(0) when constants exist.
FiniteAlgebra unifier_witness_algebra(std::span<const FiniteAlgebra> family, const Limits& limits = default_limits());

bool check_unifiable(std::span<const FiniteAlgebra> family, std::span<const Equation> equations,
                     const Limits& limits = default_limits());

enum class AdmRoute { basis, direct };

bool check_admissible(std::span<const FiniteAlgebra> family, const Clause& clause, AdmRoute route = AdmRoute::basis,
                      const Limits& limits = default_limits());
// Validity in a precomputed basis; an empty basis stands for the trivial
// quasivariety.
bool check_admissible_in_basis(std::span<const FiniteAlgebra> basis, const Signature& sig, const Clause& clause,
                               const Limits& limits = default_limits());

// basis: every generating algebra lies in ISP of the admissibility basis.
// direct: every generating algebra embeds into F_K(n), n = max member size.
bool is_structurally_complete(std::span<const FiniteAlgebra> family, AdmRoute route = AdmRoute::basis,
                              const Limits& limits = default_limits());
bool is_almost_structurally_complete(std::span<const FiniteAlgebra> family, AdmRoute route = AdmRoute::basis,
                                     const Limits& limits = default_limits());

// Both flags from one basis computation.
struct CompletenessReport {
  AdmissibilityBasis adm;
  FiniteAlgebra witness;  // B for the almost-structural-completeness test
  bool structurally_complete = false;
  bool almost_structurally_complete = false;
};
CompletenessReport completeness(std::span<const FiniteAlgebra> family, const Limits& limits = default_limits());

}  // namespace qadm
