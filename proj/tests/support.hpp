#pragma once

#include <random>
#include <string>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/io.hpp"
#include "qadm/partition.hpp"
#include "qadm/term.hpp"

namespace qadm::test {

std::string data_path(const std::string& file);
ProblemFile load(const std::string& file);
FiniteAlgebra load_one(const std::string& file, std::size_t index = 0);

// Every equivalence relation on k points (restricted growth strings).
std::vector<Partition> all_equivalences(std::size_t k);

// Compatibility checked one argument position at a time.
bool brute_is_congruence(const FiniteAlgebra& alg, const Partition& theta);
bool brute_is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<Element>& h);

// Calls visit for every map 0..n-1 -> 0..m-1.
template <typename F>
void for_each_map(std::size_t n, std::size_t m, F&& visit) {
  if (m == 0 && n > 0) return;
  std::vector<Element> img(n, 0);
  while (true) {
    visit(img);
    std::size_t i = n;
    while (i-- > 0) {
      if (++img[i] < m) break;
      img[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1) || n == 0) return;
  }
}

// |F_K(n)| by closing the generator tuples under the operations with plain
// sets of coordinate vectors.
std::size_t naive_free_size(const std::vector<FiniteAlgebra>& family, std::size_t n);

Term random_term(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars, int depth);
Clause random_clause(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                     std::size_t max_premises, bool allow_negative);
Rule random_rule(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                 std::size_t max_premises);
std::vector<Equation> random_equations(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                                       std::size_t max_count);

}  // namespace qadm::test
