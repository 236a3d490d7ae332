#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/free_algebra.hpp"
#include "qadm/limits.hpp"
#include "qadm/term.hpp"

namespace qadm {

// A finite algebra with a set of designated values (a logical matrix).
struct Logic {
  FiniteAlgebra algebra;
  std::vector<char> designated;  // one flag per element

  std::vector<Element> designated_elements() const;
};

// Throws std::invalid_argument for out-of-range elements.
Logic make_logic(FiniteAlgebra algebra, std::span<const Element> designated);

// Every assignment designating all premises designates the conclusion.
// Throws ResourceLimitError("assignment budget") like check_valid.
bool consequence(const Logic& logic, const Rule& rule, const Limits& limits = default_limits());

// (F_A(m), D*) where D* holds the elements whose coordinates all lie in D,
// i.e. the classes of terms valid in the logic.
Logic logic_over_free(const Logic& logic, const FreeAlgebra& free);
Logic free_logic(const Logic& logic, std::size_t m, const Limits& limits = default_limits());

// L* = (F_A(|A|), D*).
Logic logic_star(const Logic& logic, const Limits& limits = default_limits());

struct ReducedLogic {
  Logic logic;
  std::size_t rank = 0;              // m of the F_A(m) the winner lives in
  std::size_t free_size = 0;         // |F_A(m)|
  std::vector<Element> subuniverse;  // the winner inside F_A(m)
  ElementMap onto;                   // designation-respecting surjection onto A
  std::size_t largest_rank_tried = 0;
};

// Smallest sublogic (B, D* restricted to B) of some F_A(m) that maps onto A
// by a surjection sending designated values to designated values. Searches
// m = d(A) .. |A| while the free algebra fits the limits.
ReducedLogic reduced_logic(const Logic& logic, const Limits& limits = default_limits());

// Largest m <= |A| (and at least the generating number of A) whose free
// logic fits the limits; equals logic_star whenever F_A(|A|) fits.
Logic largest_free_logic(const Logic& logic, const Limits& limits = default_limits());

enum class LogicRoute { reduced, star };

bool rule_admissible(const Logic& logic, const Rule& rule, LogicRoute route = LogicRoute::reduced,
                     const Limits& limits = default_limits());

}  // namespace qadm
