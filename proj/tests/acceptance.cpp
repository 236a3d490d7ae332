// Acceptance runner: one PASS/FAIL line per criterion. All tolerances are
// exact. `acceptance N` runs criterion N only; no argument runs all.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "qadm/admissibility.hpp"
#include "qadm/census.hpp"
#include "qadm/free_algebra.hpp"
#include "qadm/homomorphism.hpp"
#include "qadm/logic.hpp"
#include "qadm/mingen.hpp"
#include "qadm/structure.hpp"
#include "support.hpp"

using namespace qadm;
using qadm::test::load;

namespace {

struct Row {
  const char* file;
  std::size_t rank;
  std::size_t free_size;
  std::size_t basis_size;
};

// Table rows: algebra file, free generators, free size, basis size.
const std::vector<Row> kRows{
    {"l3.alg", 1, 12, 6},      {"l3imp.alg", 2, 40, 3},   {"b1.alg", 1, 6, 3},     {"c3.alg", 1, 6, 4},
    {"c3l.alg", 2, 82, 4},     {"s3.alg", 2, 264, 6},     {"s3imp.alg", 2, 60, 3}, {"g3plus.alg", 2, 18, 3},
    {"d4l.alg", 2, 166, 8},    {"d4.alg", 2, 168, 10},    {"p.alg", 2, 6, 3},      {"z4.alg", 1, 18, 6},
    {"z4plus.alg", 2, 453, 4}, {"b2.alg", 1, 7, 5},       {"m5.alg", 3, 28, 5},    {"n5.alg", 3, 99, 5},
};

struct Verdict {
  bool pass;
  std::string detail;
};

Verdict free_sizes() {
  std::ostringstream d;
  bool pass = true;
  for (const auto& r : kRows) {
    auto p = load(r.file);
    auto got = free_size(p.algebras, r.rank);
    if (got != r.free_size) {
      pass = false;
      d << r.file << " F(" << r.rank << ")=" << got << " expected " << r.free_size << "; ";
    }
  }
  if (pass) d << "16/16 rows exact";
  return {pass, d.str()};
}

Verdict basis_sizes() {
  std::ostringstream d;
  bool pass = true;
  for (const auto& r : kRows) {
    auto p = load(r.file);
    auto b = adm_algs(p.algebras);
    std::size_t got = b.basis.size() == 1 ? b.basis[0].size() : 0;
    if (got != r.basis_size) {
      pass = false;
      d << r.file << " basis " << b.basis.size() << " algebra(s), first size " << got << " expected one of size "
        << r.basis_size << "; ";
    }
  }
  if (pass) d << "16/16 rows exact";
  return {pass, d.str()};
}

Verdict two_chains() {
  auto p = load("c2e_c3e.alg");
  auto f1 = free_size(p.algebras, 1);
  auto b = adm_algs(p.algebras);
  std::ostringstream d;
  d << "|F(1)|=" << f1 << " basis count " << b.basis.size();
  if (!b.basis.empty()) d << " first size " << b.basis[0].size();
  return {f1 == 16 && b.basis.size() == 1 && b.basis[0].size() == 4, d.str()};
}

Verdict unary_p() {
  auto p = load("p.alg");
  auto f1 = free_algebra(p.algebras, 1);
  auto f2 = free_size(p.algebras, 2);
  auto gens = min_gen_set(p.algebras);
  bool iso = gens.size() == 1 && gens[0].size() == 3 && are_isomorphic(gens[0], f1.base());
  bool sc = is_structurally_complete(p.algebras);
  std::ostringstream d;
  d << "|F(1)|=" << f1.size() << " |F(2)|=" << f2 << " mingen " << gens.size() << " algebra(s)"
    << (iso ? " iso F(1)" : " not iso F(1)") << " sc=" << sc;
  return {f1.size() == 3 && f2 == 6 && iso && sc, d.str()};
}

Verdict completeness_flags() {
  std::ostringstream d;
  bool pass = true;
  auto flags = [](const char* file) { return completeness(load(file).algebras); };
  for (const char* f : {"g3plus.alg", "b1.alg", "s3imp.alg", "m5.alg", "n5.alg", "p.alg", "b2.alg"}) {
    auto r = flags(f);
    if (!r.structurally_complete) {
      pass = false;
      d << f << " not SC; ";
    }
  }
  for (const char* f : {"l3.alg", "s3.alg"}) {
    auto r = flags(f);
    if (r.structurally_complete || !r.almost_structurally_complete) {
      pass = false;
      d << f << " sc=" << r.structurally_complete << " asc=" << r.almost_structurally_complete << "; ";
    }
  }
  // D4: the basis (10 elements) is not D4 x B (8), so the product test must fail.
  auto d4 = flags("d4.alg");
  if (d4.almost_structurally_complete || d4.adm.basis.size() != 1 || d4.adm.basis[0].size() == 8) {
    pass = false;
    d << "d4 asc=" << d4.almost_structurally_complete << "; ";
  }
  // C3: the verdict must match a separate ISP check of C3 x B against the basis.
  auto c3 = flags("c3.alg");
  auto c3alg = load("c3.alg").algebras;
  std::vector<FiniteAlgebra> pair{c3alg[0], c3.witness};
  auto prod = product(pair);
  bool by_embedding = true;
  for (const auto& g : min_gen_set(std::span(&prod, 1))) by_embedding &= in_isp(g, c3.adm.basis);
  if (c3.almost_structurally_complete != by_embedding) {
    pass = false;
    d << "c3 asc inconsistent; ";
  }
  if (pass)
    d << "7 SC, L3/S3 ASC only, d4 asc=" << d4.almost_structurally_complete
      << ", c3 asc=" << c3.almost_structurally_complete;
  return {pass, d.str()};
}

Verdict census() {
  CensusOptions o;
  o.size = 3;
  o.arity = 2;
  auto r = run_census(o);
  std::ostringstream d;
  d << "class_count=" << r.class_count << " sc_count=" << r.sc_count << " asc_only_count=" << r.asc_only_count
    << " (neither_count=" << r.neither_count << ") skipped=" << r.skipped_count << " free sizes ["
    << r.min_free_size << "," << r.max_free_size << "] max basis algebra " << r.max_basis_algebra_size;
  bool pass = r.class_count == 3330 && r.sc_count == 2676 && r.asc_only_count == 254 && r.skipped_count == 0 &&
              r.min_free_size >= 3 && r.max_free_size <= 1296 && r.max_basis_algebra_size <= 9;
  return {pass, d.str()};
}

Verdict reduced_logics() {
  auto l3 = load("l3.alg").algebras[0];
  const std::vector<Element> luk{2}, j3{1, 2};
  auto a = reduced_logic(make_logic(l3, luk));
  auto b = reduced_logic(make_logic(l3, j3));
  std::ostringstream d;
  d << "L3: " << a.logic.algebra.size() << " elements, " << a.logic.designated_elements().size()
    << " designated; J3: " << b.logic.algebra.size() << " elements, " << b.logic.designated_elements().size()
    << " designated";
  bool pass = a.logic.algebra.size() == 6 && a.logic.designated_elements().size() == 1 &&
              b.logic.algebra.size() == 6 && b.logic.designated_elements().size() == 2;
  return {pass, d.str()};
}

Verdict property_suites() {
  using namespace qadm::test;
  std::vector<std::pair<const char*, std::function<PropertyOutcome()>>> suites{
      {"congruence", [] { return congruence_oracle_suite(); }},
      {"structure", [] { return structure_law_suite(); }},
      {"multiset", [] { return multiset_order_suite(); }},
      {"adm routes", [] { return admissibility_route_suite(200); }},
      {"logic routes", [] { return logic_route_suite(100); }},
      {"unification", [] { return unification_duality_suite(100); }},
  };
  std::ostringstream d;
  bool pass = true;
  for (auto& [name, run] : suites) {
    auto o = run();
    d << name << " " << o.checked << (o.ok ? " ok" : " FAILED: " + o.detail) << "; ";
    pass &= o.ok;
  }
  return {pass, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria{free_sizes,      basis_sizes,    two_chains,     unary_p,
                                                       completeness_flags, census,     reduced_logics, property_suites};
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    auto n = std::strtoul(argv[i], nullptr, 10);
    if (n < 1 || n > criteria.size()) {
      std::cerr << "usage: acceptance [criterion 1-" << criteria.size() << "]...\n";
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty())
    for (std::size_t n = 1; n <= criteria.size(); ++n) selected.push_back(n);

  bool all = true;
  for (auto n : selected) {
    auto start = std::chrono::steady_clock::now();
    auto v = criteria[n - 1]();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << v.detail << " (" << secs << "s)"
              << std::endl;
    all &= v.pass;
  }
  return all ? 0 : 1;
}
