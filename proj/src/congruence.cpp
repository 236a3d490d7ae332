#include "qadm/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qadm/kernels.hpp"

namespace qadm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  Element find(Element x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::uint32_t> labels() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = find(static_cast<Element>(i));
    return out;
  }

 private:
  std::vector<Element> parent_;
};

Partition close_pairs(const FiniteAlgebra& alg, std::span<const ElementPair> pairs) {
  const std::size_t k = alg.size();
  UnionFind uf(k);
  std::deque<ElementPair> pending;
  for (auto [a, b] : pairs) {
    if (a >= k || b >= k) throw std::invalid_argument("congruence pair out of range");
    if (uf.unite(a, b)) pending.emplace_back(a, b);
  }
  const auto& sig = alg.signature();
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t r = sig[op].arity;
      if (r == 0) continue;
      const auto table = alg.table(op);
      std::size_t stride = 1;
      for (std::size_t i = 1; i < r; ++i) stride *= k;
      std::size_t outer_count = 1;
      // Position p of r: stride k^(r-1-p), k^p outer blocks.
      for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t outer = 0; outer < outer_count; ++outer) {
          for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t base = outer * k * stride + inner;
            Element x = table[base + a * stride];
            Element y = table[base + b * stride];
            if (uf.unite(x, y)) pending.emplace_back(x, y);
          }
        }
        stride /= k;
        outer_count *= k;
      }
    }
  }
  return Partition(uf.labels());
}

}  // namespace

Partition congruence_closure(const FiniteAlgebra& alg, std::span<const ElementPair> pairs) {
  return close_pairs(alg, pairs);
}

Partition congruence_closure(const FiniteAlgebra& alg, const Partition& equivalence) {
  if (equivalence.universe_size() != alg.size()) throw std::invalid_argument("partition has wrong universe size");
  std::vector<ElementPair> pairs;
  auto reps = equivalence.representatives();
  for (Element a = 0; a < alg.size(); ++a) {
    Element r = reps[equivalence.block_of(a)];
    if (r != a) pairs.emplace_back(r, a);
  }
  return close_pairs(alg, pairs);
}

bool is_congruence(const FiniteAlgebra& alg, const Partition& theta) {
  if (theta.universe_size() != alg.size()) return false;
  const auto reps = theta.representatives();
  const std::size_t k = alg.size();
  const auto& sig = alg.signature();
  std::vector<std::size_t> tuple;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t r = sig[op].arity;
    const auto table = alg.table(op);
    tuple.assign(r, 0);
    for (std::size_t t = 0; t < table.size(); ++t) {
      std::size_t rep_idx = 0;
      for (std::size_t i = 0; i < r; ++i) rep_idx = rep_idx * k + reps[theta.block_of(static_cast<Element>(tuple[i]))];
      if (theta.block_of(table[t]) != theta.block_of(table[rep_idx])) return false;
      for (std::size_t i = r; i-- > 0;) {
        if (++tuple[i] < k) break;
        tuple[i] = 0;
      }
    }
  }
  return true;
}

std::vector<Partition> principal_congruences(const FiniteAlgebra& alg) {
  auto all = kernels::parallel::principal_congruences(alg);
  std::vector<Partition> out;
  std::set<Partition> seen;
  for (auto& p : all.by_pair)
    if (seen.insert(p).second) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> all_congruences(const FiniteAlgebra& alg) {
  const std::size_t k = alg.size();
  auto principals = principal_congruences(alg);
  std::set<Partition> found(principals.begin(), principals.end());
  found.insert(Partition::discrete(k));
  std::vector<Partition> work(principals.begin(), principals.end());
  while (!work.empty()) {
    Partition theta = std::move(work.back());
    work.pop_back();
    for (const auto& p : principals) {
      if (p.refines(theta)) continue;
      Partition j = join(theta, p);
      if (found.insert(j).second) work.push_back(std::move(j));
    }
  }
  std::vector<Partition> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a < b;
  });
  return out;
}

}  // namespace qadm
