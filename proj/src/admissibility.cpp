#include "qadm/admissibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qadm/congruence.hpp"
#include "qadm/homomorphism.hpp"
#include "qadm/mingen.hpp"
#include "qadm/structure.hpp"
#include "qadm/validity.hpp"

namespace qadm {

namespace {

FiniteAlgebra trivial_algebra(const SignaturePtr& sig) {
  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig->size(); ++op) tables.emplace_back(1, 0);
  return FiniteAlgebra(sig, "T", 1, std::move(tables));
}

bool generates_all(SubuniverseCloser& closer, std::vector<Element> seed, std::size_t size) {
  closer.close(seed, 0, size);
  return seed.size() == size;
}

// Surjective projection of F_D(m) onto A when A is literally a member of D.
std::optional<ElementMap> projection_onto(const FreeAlgebra& f, const FiniteAlgebra& a) {
  const auto& family = f.family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].same_tables(a)) continue;
    const std::size_t m = f.rank();
    const std::uint64_t count = checked_power(a.size(), m);
    SubuniverseCloser closer(a);
    std::vector<Element> assignment(m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t g = m; g-- > 0;) {
        assignment[g] = static_cast<Element>(rest % a.size());
        rest /= a.size();
      }
      std::vector<Element> seed(assignment);
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      if (generates_all(closer, seed, a.size())) return f.projection(i, idx);
    }
    return std::nullopt;
  }
  return find_homomorphism(f.base(), a, HomMode::surjective);
}

class SubalgebraSearch {
 public:
  SubalgebraSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, const PairFilter& filter, const Limits& limits)
      : a_(a), b_(b), filter_(filter), limits_(limits), closer_(b), depth_limit_(generating_number(a)) {}

  std::optional<SubPreHomResult> run(std::size_t max_size) {
    if (b_.size() <= a_.size() || max_size < a_.size()) return std::nullopt;
    const std::size_t top = std::min(b_.size() - 1, max_size);
    std::size_t bound = std::min(a_.size(), top);
    while (true) {
      bound_ = bound;
      std::vector<Element> members;
      if (closer_.close(members, 0, bound_)) dfs(0, members, 0);
      if (best_) return std::move(best_);
      if (bound >= top) return std::nullopt;
      bound = std::min(top, bound * 2);
    }
  }

 private:
  std::size_t limit() const { return best_ ? std::min(bound_, best_->subuniverse.size() - 1) : bound_; }

  void test(const std::vector<Element>& members) {
    if (members.size() < a_.size() || members.size() > limit()) return;
    std::vector<Element> key(members);
    std::sort(key.begin(), key.end());
    if (!tested_.insert(std::move(key)).second) return;
    FiniteAlgebra sub = restrict_to(b_, members);
    ImageFilter allowed;
    if (filter_) allowed = [&](Element x, Element y) { return filter_(members[x], y); };
    auto hom = find_homomorphism(sub, a_, HomMode::surjective, allowed);
    if (hom) best_ = SubPreHomResult{std::move(sub), members, std::move(*hom), true};
  }

  void dfs(std::size_t depth, const std::vector<Element>& members, Element start) {
    if (!members.empty()) test(members);
    if (depth == depth_limit_) return;
    limits_.check_deadline();
    std::vector<char> inside(b_.size(), 0);
    for (Element e : members) inside[e] = 1;
    std::vector<Element> next;
    for (Element x = start; x < b_.size(); ++x) {
      if (inside[x]) continue;
      if (members.size() + 1 > limit()) return;
      next = members;
      next.push_back(x);
      if (!closer_.close(next, members.size(), limit())) continue;
      dfs(depth + 1, next, x + 1);
    }
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  const PairFilter& filter_;
  const Limits& limits_;
  SubuniverseCloser closer_;
  std::size_t depth_limit_;
  std::size_t bound_ = 0;
  std::set<std::vector<Element>> tested_;
  std::optional<SubPreHomResult> best_;
};

}  // namespace

std::size_t generating_number(const FiniteAlgebra& alg) {
  SubuniverseCloser closer(alg);
  const std::size_t k = alg.size();
  if (generates_all(closer, {}, k)) return 0;
  for (std::size_t d = 1; d <= k; ++d) {
    std::vector<Element> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = static_cast<Element>(i);
    while (true) {
      if (generates_all(closer, pick, k)) return d;
      std::size_t i = d;
      while (i-- > 0) {
        if (pick[i] < k - d + i) {
          ++pick[i];
          for (std::size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
          break;
        }
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return k;
}

FreeCover free_with_hom_onto(const FiniteAlgebra& a, std::span<const FiniteAlgebra> family, const Limits& limits) {
  if (family.empty()) throw std::invalid_argument("empty family");
  require_same_signature(a.signature(), family[0].signature());
  const std::size_t m0 = a.signature().has_constants() ? 0 : 1;
  const std::size_t last = std::max(a.size(), m0);
  for (std::size_t m = std::max(m0, generating_number(a)); m <= last; ++m) {
    FreeAlgebra f = free_algebra(family, m, limits);
    if (auto h = projection_onto(f, a)) return {std::move(f), std::move(*h)};
  }
  throw std::invalid_argument("algebra '" + a.name() + "' is not a homomorphic image of a free algebra of the family");
}

std::optional<SubPreHomResult> find_sub_pre_hom(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                                const PairFilter& filter, std::size_t max_size, const Limits& limits) {
  require_same_signature(a.signature(), b.signature());
  return SubalgebraSearch(a, b, filter, limits).run(max_size);
}

SubPreHomResult sub_pre_hom_search(const FiniteAlgebra& a, const FiniteAlgebra& b, const PairFilter& filter,
                                   const Limits& limits) {
  if (auto found = find_sub_pre_hom(a, b, filter, b.size(), limits)) return std::move(*found);
  ImageFilter allowed;
  if (filter) allowed = [&](Element x, Element y) { return filter(x, y); };
  auto hom = find_homomorphism(b, a, HomMode::surjective, allowed);
  if (!hom) throw std::invalid_argument("no surjective homomorphism from '" + b.name() + "' onto '" + a.name() + "'");
  std::vector<Element> all(b.size());
  for (Element e = 0; e < b.size(); ++e) all[e] = e;
  return {b, std::move(all), std::move(*hom), false};
}

FiniteAlgebra sub_pre_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const Limits& limits) {
  return sub_pre_hom_search(a, b, {}, limits).algebra;
}

AdmissibilityBasis adm_algs(std::span<const FiniteAlgebra> family, const Limits& limits) {
  AdmissibilityBasis out;
  out.generating = min_gen_set(family);
  std::vector<FiniteAlgebra> collection;
  std::vector<BasisProvenance> chains;
  for (std::size_t i = 0; i < out.generating.size(); ++i) {
    const FiniteAlgebra& a = out.generating[i];
    FreeCover cover = free_with_hom_onto(a, out.generating, limits);
    BasisProvenance prov{i, cover.free.rank(), {cover.free.size()}};
    FiniteAlgebra current = cover.free.base();
    while (true) {
      auto step = sub_pre_hom_search(a, current, {}, limits);
      if (!step.proper) break;
      current = std::move(step.algebra);
      prov.chain.push_back(current.size());
    }
    current.set_name(a.name() + "_adm");
    out.free_sizes.push_back(cover.free.size());
    out.reduced_sizes.push_back(current.size());
    collection.push_back(std::move(current));
    chains.push_back(std::move(prov));
  }
  auto reduced = min_gen_set_traced(collection);
  out.basis = std::move(reduced.algebras);
  for (std::size_t origin : reduced.origin) out.provenance.push_back(chains[origin]);
  return out;
}

bool in_isp(const FiniteAlgebra& c, std::span<const FiniteAlgebra> family) {
  for (const auto& m : family)
    if (c.size() <= m.size() && embeds(c, m)) return true;
  EmbeddingCache cache;
  std::vector<std::string> codes;
  for (const auto& m : family) codes.push_back(canonical_code(m));
  std::vector<Partition> kernels;
  for (const auto& theta : all_congruences(c)) {
    if (theta.is_discrete()) continue;
    auto q = quotient(c, theta).first;
    const std::string cq = canonical_code(q);
    for (std::size_t j = 0; j < family.size(); ++j)
      if (cache.embeds(q, cq, family[j], codes[j])) {
        kernels.push_back(theta);
        break;
      }
  }
  return meet_all(c.size(), kernels).is_discrete();
}

FiniteAlgebra unifier_witness_algebra(std::span<const FiniteAlgebra> family, const Limits& limits) {
  return minimal_subalgebra(free_algebra(family, 1, limits).base());
}

bool check_unifiable(std::span<const FiniteAlgebra> family, std::span<const Equation> equations,
                     const Limits& limits) {
  return check_satisfiable(unifier_witness_algebra(family, limits), equations, limits);
}

bool check_admissible_in_basis(std::span<const FiniteAlgebra> basis, const Signature& sig, const Clause& clause,
                               const Limits& limits) {
  if (basis.empty()) {
    FiniteAlgebra t = trivial_algebra(std::make_shared<const Signature>(sig));
    return check_valid(std::span(&t, 1), clause, limits);
  }
  return check_valid(basis, clause, limits);
}

bool check_admissible(std::span<const FiniteAlgebra> family, const Clause& clause, AdmRoute route,
                      const Limits& limits) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (route == AdmRoute::direct) {
    std::size_t n = 0;
    for (const auto& a : family) n = std::max(n, a.size());
    FreeAlgebra f = free_algebra(family, n, limits);
    return check_valid(std::span(&f.base(), 1), clause, limits);
  }
  auto adm = adm_algs(family, limits);
  return check_admissible_in_basis(adm.basis, family[0].signature(), clause, limits);
}

namespace {

std::vector<FiniteAlgebra> times_witness(std::span<const FiniteAlgebra> family, const FiniteAlgebra& b,
                                         const Limits& limits) {
  std::vector<FiniteAlgebra> out;
  for (const auto& a : family) {
    std::vector<FiniteAlgebra> pair{a, b};
    out.push_back(product(pair, limits));
  }
  return out;
}

bool all_embed_into_free(std::span<const FiniteAlgebra> algs, std::span<const FiniteAlgebra> family,
                         const Limits& limits) {
  std::size_t n = 0;
  for (const auto& a : family) n = std::max(n, a.size());
  FreeAlgebra f = free_algebra(family, n, limits);
  return std::all_of(algs.begin(), algs.end(), [&](const FiniteAlgebra& a) { return embeds(a, f.base()); });
}

}  // namespace

CompletenessReport completeness(std::span<const FiniteAlgebra> family, const Limits& limits) {
  if (family.empty()) throw std::invalid_argument("empty family");
  AdmissibilityBasis adm = adm_algs(family, limits);
  FiniteAlgebra witness = unifier_witness_algebra(family, limits);
  auto inside = [&](const FiniteAlgebra& c) { return in_isp(c, adm.basis); };
  bool sc = std::all_of(adm.generating.begin(), adm.generating.end(), inside);
  bool asc = sc;
  if (!sc) {
    auto gens = min_gen_set(times_witness(family, witness, limits));
    asc = std::all_of(gens.begin(), gens.end(), inside);
  }
  return {std::move(adm), std::move(witness), sc, asc};
}

bool is_structurally_complete(std::span<const FiniteAlgebra> family, AdmRoute route, const Limits& limits) {
  if (route == AdmRoute::direct) return all_embed_into_free(min_gen_set(family), family, limits);
  return completeness(family, limits).structurally_complete;
}

bool is_almost_structurally_complete(std::span<const FiniteAlgebra> family, AdmRoute route, const Limits& limits) {
  if (route == AdmRoute::direct) {
    FiniteAlgebra witness = unifier_witness_algebra(family, limits);
    return all_embed_into_free(min_gen_set(times_witness(family, witness, limits)), family, limits);
  }
  return completeness(family, limits).almost_structurally_complete;
}

}  // namespace qadm
