#pragma once

// Data-parallel kernels. Each kernel has an OpenMP version in
// qadm::kernels::parallel, used by the library, and a plain reference
// version in qadm::kernels::serial, kept for tests and benchmarks. Both
// return identical results for identical inputs regardless of thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/partition.hpp"

namespace qadm {
class ClauseProgram;
}

namespace qadm::kernels {

// Cg(a, b) for every pair a < b, in lexicographic pair order.
struct PrincipalCongruences {
  std::vector<Partition> by_pair;
};

// Index (in lexicographic order over all |alg|^vars assignments) of the first
// assignment at which the program fails, if any. designated is only read by
// programs with designation atoms.
using FirstFailure = std::optional<std::uint64_t>;

// Coordinatewise application of one operation: for each argument tuple in
// tuples (r element ids per tuple), writes the coordinate vector of the
// result into out (len entries per tuple). coords holds len entries per
// element and blocks[j] is the algebra evaluating coordinate range j.
struct CoordinateBlock {
  const FiniteAlgebra* algebra;
  std::size_t begin;
  std::size_t end;
};

namespace serial {
PrincipalCongruences principal_congruences(const FiniteAlgebra& alg);
FirstFailure first_failure(const ClauseProgram& program, const FiniteAlgebra& alg,
                           std::span<const char> designated);
void apply_coordinatewise(std::size_t op, std::size_t arity, std::span<const CoordinateBlock> blocks,
                          std::size_t len, std::span<const std::uint16_t> coords,
                          std::span<const Element> tuples, std::span<std::uint16_t> out);
}  // namespace serial

namespace parallel {
PrincipalCongruences principal_congruences(const FiniteAlgebra& alg);
FirstFailure first_failure(const ClauseProgram& program, const FiniteAlgebra& alg,
                           std::span<const char> designated);
void apply_coordinatewise(std::size_t op, std::size_t arity, std::span<const CoordinateBlock> blocks,
                          std::size_t len, std::span<const std::uint16_t> coords,
                          std::span<const Element> tuples, std::span<std::uint16_t> out);
}  // namespace parallel

// Number of OpenMP threads used by the parallel kernels (0 = runtime default).
void set_thread_count(int threads);
int thread_count();

}  // namespace qadm::kernels
