#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qadm/algebra.hpp"

namespace qadm {

class Term {
 public:
  static constexpr std::size_t kVariable = static_cast<std::size_t>(-1);

  static Term variable(std::string name);
  // Throws std::invalid_argument on unknown symbol index or arity mismatch.
  static Term apply(const Signature& sig, std::size_t op, std::vector<Term> args);

  bool is_variable() const { return node_->op == kVariable; }
  // Variable name, or the operation symbol's name for applications.
  const std::string& name() const { return node_->name; }
  std::size_t op() const { return node_->op; }
  const std::vector<Term>& args() const { return node_->args; }

  void collect_variables(std::set<std::string>& out) const;
  std::set<std::string> variables() const;
  std::size_t depth() const;

  // Prefix notation; constants print as bare names.
  std::string to_string() const;

  bool operator==(const Term& other) const;

 private:
  struct Node {
    std::string name;
    std::size_t op;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs;
  Term rhs;

  std::string to_string() const;
};

// Sigma => Delta; an empty Delta makes a negative clause.
struct Clause {
  std::vector<Equation> premises;
  std::vector<Equation> conclusions;

  bool is_negative() const { return conclusions.empty(); }
  bool is_quasiequation() const { return conclusions.size() == 1; }
  std::set<std::string> variables() const;
  std::string to_string() const;
};

// Gamma / phi.
struct Rule {
  std::vector<Term> premises;
  Term conclusion;

  std::set<std::string> variables() const;
  std::string to_string() const;
};

Term parse_term(std::string_view text, const Signature& sig);
Equation parse_equation(std::string_view text, const Signature& sig);
// Comma-separated equations; empty text gives an empty list.
std::vector<Equation> parse_equations(std::string_view text, const Signature& sig);
Clause parse_clause(std::string_view text, const Signature& sig);
Rule parse_rule(std::string_view text, const Signature& sig);

// Throws std::invalid_argument for unbound variables or a term whose symbols
// do not fit the algebra's signature.
Element eval_term(const FiniteAlgebra& alg, const Term& t, const std::map<std::string, Element>& assignment);

}  // namespace qadm
