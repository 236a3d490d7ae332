#include "qadm/program.hpp"

#include <algorithm>
#include <stdexcept>

namespace qadm {

ClauseProgram ClauseProgram::from_clause(const Clause& clause) {
  ClauseProgram p;
  auto vars = clause.variables();
  p.variables_.assign(vars.begin(), vars.end());
  for (const auto& e : clause.premises) p.premises_.push_back({p.add(e.lhs), p.add(e.rhs), false});
  for (const auto& e : clause.conclusions) p.conclusions_.push_back({p.add(e.lhs), p.add(e.rhs), false});
  p.finalize();
  return p;
}

ClauseProgram ClauseProgram::from_rule(const Rule& rule) {
  ClauseProgram p;
  auto vars = rule.variables();
  p.variables_.assign(vars.begin(), vars.end());
  for (const auto& t : rule.premises) {
    auto n = p.add(t);
    p.premises_.push_back({n, n, true});
  }
  auto n = p.add(rule.conclusion);
  p.conclusions_.push_back({n, n, true});
  p.finalize();
  return p;
}

bool ClauseProgram::uses_designation() const {
  auto des = [](const Atom& a) { return a.designation; };
  return std::any_of(premises_.begin(), premises_.end(), des) ||
         std::any_of(conclusions_.begin(), conclusions_.end(), des);
}

std::uint32_t ClauseProgram::add(const Term& t) {
  std::string key = t.to_string();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Node node;
  if (t.is_variable()) {
    auto it = std::lower_bound(variables_.begin(), variables_.end(), t.name());
    node.op = kVariableNode;
    node.var = static_cast<std::uint32_t>(it - variables_.begin());
    node.max_var = static_cast<int>(node.var);
  } else {
    node.op = static_cast<std::uint32_t>(t.op());
    node.var = 0;
    node.max_var = -1;
    for (const auto& a : t.args()) {
      auto id = add(a);
      node.args.push_back(id);
      node.max_var = std::max(node.max_var, nodes_[id].max_var);
    }
  }
  nodes_.push_back(std::move(node));
  auto id = static_cast<std::uint32_t>(nodes_.size() - 1);
  memo_.emplace(std::move(key), id);
  return id;
}

void ClauseProgram::finalize() {
  dirty_.assign(variables_.size() + 1, {});
  for (std::size_t j = 0; j <= variables_.size(); ++j)
    for (std::uint32_t n = 0; n < nodes_.size(); ++n)
      if (nodes_[n].max_var >= static_cast<int>(j)) dirty_[j].push_back(n);
  memo_.clear();
}

void ClauseProgram::evaluate(const FiniteAlgebra& alg, std::span<const Element> assignment,
                             std::vector<Element>& values) const {
  values.resize(nodes_.size());
  Element args[16];
  std::vector<Element> wide;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const auto& node = nodes_[n];
    if (node.op == kVariableNode) {
      values[n] = assignment[node.var];
      continue;
    }
    const std::size_t r = node.args.size();
    if (r <= 16) {
      for (std::size_t i = 0; i < r; ++i) args[i] = values[node.args[i]];
      values[n] = alg.apply(node.op, std::span<const Element>(args, r));
    } else {
      wide.resize(r);
      for (std::size_t i = 0; i < r; ++i) wide[i] = values[node.args[i]];
      values[n] = alg.apply(node.op, wide);
    }
  }
}

void ClauseProgram::evaluate_nodes(const FiniteAlgebra& alg, std::span<const Element> assignment,
                                   std::span<const std::uint32_t> nodes, std::vector<Element>& values) const {
  const std::size_t k = alg.size();
  for (std::uint32_t n : nodes) {
    const auto& node = nodes_[n];
    if (node.op == kVariableNode) {
      values[n] = assignment[node.var];
      continue;
    }
    std::size_t idx = 0;
    for (std::uint32_t a : node.args) idx = idx * k + values[a];
    values[n] = alg.table(node.op)[idx];
  }
}

bool ClauseProgram::fails(std::span<const Element> values, std::span<const char> designated) const {
  auto holds = [&](const Atom& a) {
    if (a.designation) return designated[values[a.lhs]] != 0;
    return values[a.lhs] == values[a.rhs];
  };
  for (const auto& a : premises_)
    if (!holds(a)) return false;
  for (const auto& a : conclusions_)
    if (holds(a)) return false;
  return true;
}

}  // namespace qadm
