#include "support.hpp"

#include <set>

namespace qadm::test {

std::string data_path(const std::string& file) { return std::string(QADM_DATA_DIR) + "/" + file; }

ProblemFile load(const std::string& file) {
  std::vector<std::string> paths{data_path(file)};
  return load_problem_files(paths);
}

FiniteAlgebra load_one(const std::string& file, std::size_t index) { return load(file).algebras.at(index); }

std::vector<Partition> all_equivalences(std::size_t k) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> rgs(k, 0);
  auto rec = [&](auto& self, std::size_t i, std::uint32_t max_label) -> void {
    if (i == k) {
      out.emplace_back(rgs);
      return;
    }
    for (std::uint32_t l = 0; l <= max_label + 1; ++l) {
      rgs[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  if (k == 0) return {Partition(std::vector<std::uint32_t>{})};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

bool brute_is_congruence(const FiniteAlgebra& alg, const Partition& theta) {
  const std::size_t k = alg.size();
  for (std::size_t op = 0; op < alg.signature().size(); ++op) {
    const std::size_t r = alg.signature()[op].arity;
    bool ok = true;
    for_each_map(r, k, [&](const std::vector<Element>& args) {
      for (std::size_t pos = 0; pos < r && ok; ++pos)
        for (Element b = 0; b < k && ok; ++b) {
          if (!theta.related(args[pos], b)) continue;
          auto other = args;
          other[pos] = b;
          if (!theta.related(alg.apply(op, args), alg.apply(op, other))) ok = false;
        }
    });
    if (!ok) return false;
  }
  return true;
}

bool brute_is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<Element>& h) {
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const std::size_t r = a.signature()[op].arity;
    bool ok = true;
    for_each_map(r, a.size(), [&](const std::vector<Element>& args) {
      if (!ok) return;
      std::vector<Element> mapped;
      for (Element x : args) mapped.push_back(h[x]);
      if (h[a.apply(op, args)] != b.apply(op, mapped)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::size_t naive_free_size(const std::vector<FiniteAlgebra>& family, std::size_t n) {
  using Tuple = std::vector<Element>;
  std::vector<std::pair<const FiniteAlgebra*, std::vector<Element>>> coords;
  for (const auto& a : family)
    for_each_map(n, a.size(), [&](const std::vector<Element>& asg) { coords.emplace_back(&a, asg); });
  std::set<Tuple> seen;
  std::vector<Tuple> elems;
  auto add = [&](Tuple t) {
    if (seen.insert(t).second) elems.push_back(std::move(t));
  };
  for (std::size_t g = 0; g < n; ++g) {
    Tuple t;
    for (const auto& c : coords) t.push_back(c.second[g]);
    add(t);
  }
  const auto& sig = family[0].signature();
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t before = elems.size();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t r = sig[op].arity;
      const std::size_t current = elems.size();
      for_each_map(r, current, [&](const std::vector<Element>& pick) {
        Tuple t(coords.size());
        for (std::size_t c = 0; c < coords.size(); ++c) {
          std::vector<Element> args;
          for (Element p : pick) args.push_back(elems[p][c]);
          t[c] = coords[c].first->apply(op, args);
        }
        add(std::move(t));
      });
    }
    grew = elems.size() != before;
  }
  return elems.size();
}

Term random_term(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<std::size_t> coin(0, 2);
  if (depth <= 0 || coin(rng) == 0) {
    std::vector<std::size_t> constants;
    for (std::size_t i = 0; i < sig.size(); ++i)
      if (sig[i].arity == 0) constants.push_back(i);
    if (!constants.empty() && coin(rng) == 0)
      return Term::apply(sig, constants[std::uniform_int_distribution<std::size_t>(0, constants.size() - 1)(rng)], {});
    return Term::variable(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  }
  std::size_t op = std::uniform_int_distribution<std::size_t>(0, sig.size() - 1)(rng);
  std::vector<Term> args;
  for (std::size_t i = 0; i < sig[op].arity; ++i) args.push_back(random_term(rng, sig, vars, depth - 1));
  return Term::apply(sig, op, std::move(args));
}

namespace {

Equation random_equation(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars) {
  return {random_term(rng, sig, vars, 2), random_term(rng, sig, vars, 2)};
}

}  // namespace

Clause random_clause(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                     std::size_t max_premises, bool allow_negative) {
  Clause c;
  const std::size_t np = std::uniform_int_distribution<std::size_t>(0, max_premises)(rng);
  for (std::size_t i = 0; i < np; ++i) c.premises.push_back(random_equation(rng, sig, vars));
  const bool negative = allow_negative && std::uniform_int_distribution<int>(0, 5)(rng) == 0;
  if (!negative) c.conclusions.push_back(random_equation(rng, sig, vars));
  return c;
}

Rule random_rule(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                 std::size_t max_premises) {
  Rule r{{}, random_term(rng, sig, vars, 2)};
  const std::size_t np = std::uniform_int_distribution<std::size_t>(0, max_premises)(rng);
  for (std::size_t i = 0; i < np; ++i) r.premises.push_back(random_term(rng, sig, vars, 2));
  return r;
}

std::vector<Equation> random_equations(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                                       std::size_t max_count) {
  std::vector<Equation> out;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_count)(rng);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_equation(rng, sig, vars));
  return out;
}

}  // namespace qadm::test
