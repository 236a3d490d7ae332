#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/term.hpp"

namespace qadm {

// A clause compiled to a shared evaluation DAG over a sorted variable list.
// Atoms are equations between two nodes or designation tests on one node;
// the program fails at an assignment when every premise atom holds and no
// conclusion atom does.
class ClauseProgram {
 public:
  struct Node {
    std::uint32_t op;    // kVariableNode for variables
    std::uint32_t var;   // variable index when op == kVariableNode
    std::vector<std::uint32_t> args;
    int max_var;         // highest variable index the node depends on, -1 if ground
  };
  struct Atom {
    std::uint32_t lhs;
    std::uint32_t rhs;   // equal to lhs for designation atoms
    bool designation;
  };
  static constexpr std::uint32_t kVariableNode = UINT32_MAX;

  static ClauseProgram from_clause(const Clause& clause);
  // Gamma / phi under a designated set: premises are designation atoms.
  static ClauseProgram from_rule(const Rule& rule);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Atom>& premises() const { return premises_; }
  const std::vector<Atom>& conclusions() const { return conclusions_; }
  bool uses_designation() const;

  // Nodes with max_var >= j in evaluation order; j in [0, variable_count()].
  const std::vector<std::uint32_t>& dirty_nodes(std::size_t j) const { return dirty_[j]; }

  void evaluate(const FiniteAlgebra& alg, std::span<const Element> assignment, std::vector<Element>& values) const;
  void evaluate_nodes(const FiniteAlgebra& alg, std::span<const Element> assignment,
                      std::span<const std::uint32_t> nodes, std::vector<Element>& values) const;
  // designated may be empty when the program has no designation atoms.
  bool fails(std::span<const Element> values, std::span<const char> designated) const;

 private:
  std::uint32_t add(const Term& t);
  void finalize();

  std::vector<std::string> variables_;
  std::vector<Node> nodes_;
  std::vector<Atom> premises_;
  std::vector<Atom> conclusions_;
  std::vector<std::vector<std::uint32_t>> dirty_;
  std::unordered_map<std::string, std::uint32_t> memo_;
};

}  // namespace qadm
