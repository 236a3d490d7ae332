#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/kernels.hpp"
#include "qadm/limits.hpp"
#include "qadm/term.hpp"

namespace qadm {

// F_K(n) realized inside the product of A^(A^n) over A in K. Coordinates of
// member A are indexed by assignments of x1..xn into A in lexicographic
// order (x1 most significant).
class FreeAlgebra {
 public:
  struct Derivation {
    static constexpr std::uint32_t kGenerator = UINT32_MAX;
    std::uint32_t op;            // kGenerator for x_(args[0]+1)
    std::vector<Element> args;
  };

  const FiniteAlgebra& base() const { return *base_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return base_->size(); }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<FiniteAlgebra>& family() const { return family_; }

  std::size_t tuple_length() const { return tuple_length_; }
  // Start of member i's coordinates; block_offset(family().size()) == tuple_length().
  std::size_t block_offset(std::size_t member) const { return offsets_[member]; }
  std::span<const std::uint16_t> coordinates(Element e) const {
    return {coords_.data() + std::size_t{e} * tuple_length_, tuple_length_};
  }
  const Derivation& derivation(Element e) const { return derivations_[e]; }

  // A term over x1..xn denoting e; subterms are shared between calls.
  Term witness(Element e) const;

  // The homomorphism F_K(n) -> family()[member] sending x_i to the i-th
  // entry of the assignment with the given lexicographic index.
  ElementMap projection(std::size_t member, std::uint64_t assignment) const;

 private:
  friend FreeAlgebra free_algebra(std::span<const FiniteAlgebra>, std::size_t, const Limits&);
  friend std::size_t free_size(std::span<const FiniteAlgebra>, std::size_t, const Limits&);
  FreeAlgebra() = default;

  std::shared_ptr<const FiniteAlgebra> base_;
  std::size_t rank_ = 0;
  std::vector<Element> generators_;
  std::vector<FiniteAlgebra> family_;
  std::size_t tuple_length_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint16_t> coords_;
  std::vector<Derivation> derivations_;
  mutable std::vector<std::shared_ptr<Term>> witness_cache_;
};

// Throws std::invalid_argument for an empty family, n = 0 without constants,
// or mixed signatures; ResourceLimitError("free algebra coordinates") when
// size x tuple length passes limits.max_free_entries, and
// ResourceLimitError("table entries") for oversized operation tables.
FreeAlgebra free_algebra(std::span<const FiniteAlgebra> family, std::size_t n, const Limits& limits = default_limits());
std::size_t free_size(std::span<const FiniteAlgebra> family, std::size_t n, const Limits& limits = default_limits());

// Product over the family of |A|^(|A|^n), saturating at UINT64_MAX.
std::uint64_t free_size_bound(std::span<const FiniteAlgebra> family, std::size_t n);

}  // namespace qadm
