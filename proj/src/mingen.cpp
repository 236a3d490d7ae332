#include "qadm/mingen.hpp"

#include <algorithm>

#include "qadm/congruence.hpp"
#include "qadm/homomorphism.hpp"
#include "qadm/structure.hpp"

namespace qadm {

CardMultiset card_multiset(std::span<const FiniteAlgebra> algs) {
  CardMultiset m;
  for (const auto& a : algs) m.push_back(a.size());
  std::sort(m.begin(), m.end());
  return m;
}

bool multiset_leq(const CardMultiset& m1, const CardMultiset& m2) {
  std::map<std::size_t, long> diff;  // f - g
  for (auto x : m1) ++diff[x];
  for (auto x : m2) --diff[x];
  for (auto it = diff.begin(); it != diff.end(); ++it) {
    if (it->second <= 0) continue;
    bool dominated = false;
    for (auto jt = std::next(it); jt != diff.end(); ++jt)
      if (jt->second < 0) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool EmbeddingCache::embeds(const FiniteAlgebra& a, const std::string& code_a, const FiniteAlgebra& b,
                            const std::string& code_b) {
  if (a.size() > b.size()) return false;
  auto key = std::make_pair(code_a, code_b);
  auto it = results_.find(key);
  if (it != results_.end()) return it->second;
  bool r = a.size() == b.size() ? code_a == code_b : qadm::embeds(a, b);
  results_.emplace(std::move(key), r);
  return r;
}

bool EmbeddingCache::embeds(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::string ca = canonical_code(a);
  std::string cb = canonical_code(b);
  return embeds(a, ca, b, cb);
}

bool is_q_subdirectly_irreducible(const FiniteAlgebra& alg, std::span<const FiniteAlgebra> family) {
  EmbeddingCache cache;
  std::vector<std::string> family_codes;
  for (const auto& b : family) family_codes.push_back(canonical_code(b));
  std::vector<Partition> qualifying;
  for (const auto& theta : all_congruences(alg)) {
    if (theta.is_discrete()) continue;
    auto q = quotient(alg, theta).first;
    const std::string cq = canonical_code(q);
    for (std::size_t j = 0; j < family.size(); ++j)
      if (cache.embeds(q, cq, family[j], family_codes[j])) {
        qualifying.push_back(theta);
        break;
      }
  }
  return !meet_all(alg.size(), qualifying).is_discrete();
}

MinGenResult min_gen_set_traced(std::span<const FiniteAlgebra> family) {
  struct Entry {
    FiniteAlgebra alg;
    std::string code;
    std::size_t origin;
  };
  std::vector<Entry> list;
  for (std::size_t i = 0; i < family.size(); ++i)
    list.push_back({family[i], canonical_code(family[i]), i});

  EmbeddingCache cache;
  MinGenResult result;
  std::size_t i = 0;
  while (i < list.size()) {
    const Entry current = list[i];
    const FiniteAlgebra& a = current.alg;
    std::vector<Partition> covering;
    std::vector<FiniteAlgebra> added;
    for (const auto& theta : all_congruences(a)) {
      if (theta.is_discrete()) continue;
      auto q = quotient(a, theta).first;
      const std::string cq = canonical_code(q);
      bool in_s2 = false;
      for (std::size_t j = 0; j < list.size() && !in_s2; ++j)
        if (j != i && cache.embeds(q, cq, list[j].alg, list[j].code)) in_s2 = true;
      if (in_s2) {
        covering.push_back(theta);
      } else if (cache.embeds(q, cq, a, current.code)) {
        covering.push_back(theta);
        added.push_back(std::move(q));
      }
    }
    if (meet_all(a.size(), covering).is_discrete()) {
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
      for (const auto& q : added) list.push_back({q, canonical_code(q), current.origin});
      result.steps.push_back({a, std::move(covering), std::move(added)});
    } else {
      ++i;
    }
  }

  for (std::size_t k = 0; k < list.size();) {
    bool redundant = false;
    for (std::size_t j = 0; j < list.size() && !redundant; ++j)
      if (j != k && cache.embeds(list[k].alg, list[k].code, list[j].alg, list[j].code)) redundant = true;
    if (redundant)
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }

  for (auto& e : list) {
    result.algebras.push_back(std::move(e.alg));
    result.origin.push_back(e.origin);
  }
  return result;
}

std::vector<FiniteAlgebra> min_gen_set(std::span<const FiniteAlgebra> family) {
  return min_gen_set_traced(family).algebras;
}

std::vector<std::string> canonical_codes(std::span<const FiniteAlgebra> algs) {
  std::vector<std::string> codes;
  for (const auto& a : algs) codes.push_back(canonical_code(a));
  std::sort(codes.begin(), codes.end());
  return codes;
}

bool same_up_to_isomorphism(std::span<const FiniteAlgebra> a, std::span<const FiniteAlgebra> b) {
  return a.size() == b.size() && canonical_codes(a) == canonical_codes(b);
}

}  // namespace qadm
