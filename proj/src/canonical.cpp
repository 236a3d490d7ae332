#include <algorithm>
#include <numeric>

#include "qadm/homomorphism.hpp"

namespace qadm {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  v *= 0x9e3779b97f4a7c15ULL;
  v ^= v >> 29;
  h ^= v + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  return h;
}

// Individualization-refinement search. Colors are refined by hashed operation
// contexts, so every step depends only on the structure, never on the input
// labels; the least table code over all leaves is therefore invariant.
class Canonizer {
 public:
  explicit Canonizer(const FiniteAlgebra& alg) : alg_(alg), k_(alg.size()) {}

  ElementMap run() {
    std::vector<std::uint32_t> colors(k_, 0);
    std::vector<Element> path;
    search(refine(std::move(colors)), path);
    return ElementMap{best_label_};
  }

 private:
  std::vector<std::uint32_t> refine(std::vector<std::uint32_t> colors) {
    const auto& sig = alg_.signature();
    std::size_t count = distinct(colors);
    std::vector<std::vector<std::uint64_t>> ctx(k_);
    std::vector<std::size_t> tuple;
    while (count < k_) {
      for (auto& c : ctx) c.clear();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        const std::size_t r = sig[op].arity;
        const auto table = alg_.table(op);
        tuple.assign(r, 0);
        for (std::size_t t = 0; t < table.size(); ++t) {
          std::uint64_t h = mix(0x51ed27, op);
          for (std::size_t i = 0; i < r; ++i) h = mix(h, colors[tuple[i]]);
          const Element res = table[t];
          for (std::size_t p = 0; p < r; ++p) ctx[tuple[p]].push_back(mix(mix(h, p + 1), colors[res]));
          ctx[res].push_back(mix(h, 0));
          for (std::size_t i = r; i-- > 0;) {
            if (++tuple[i] < k_) break;
            tuple[i] = 0;
          }
        }
      }
      std::vector<std::pair<std::uint32_t, std::uint64_t>> keys(k_);
      for (std::size_t a = 0; a < k_; ++a) {
        std::sort(ctx[a].begin(), ctx[a].end());
        std::uint64_t h = 0x2545f491;
        for (auto v : ctx[a]) h = mix(h, v);
        keys[a] = {colors[a], h};
      }
      auto sorted = keys;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t a = 0; a < k_; ++a)
        colors[a] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[a]) - sorted.begin());
      if (sorted.size() == count) break;
      count = sorted.size();
    }
    normalize(colors);
    return colors;
  }

  static std::size_t distinct(const std::vector<std::uint32_t>& colors) {
    auto s = colors;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  static void normalize(std::vector<std::uint32_t>& colors) {
    auto s = colors;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto& c : colors) c = static_cast<std::uint32_t>(std::lower_bound(s.begin(), s.end(), c) - s.begin());
  }

  std::vector<Element> code_for(const std::vector<std::uint32_t>& label) const {
    std::vector<Element> inv(k_);
    for (std::size_t a = 0; a < k_; ++a) inv[label[a]] = static_cast<Element>(a);
    std::vector<Element> code;
    const auto& sig = alg_.signature();
    std::vector<std::size_t> tuple;
    std::vector<Element> args;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t r = sig[op].arity;
      const std::size_t entries = alg_.table(op).size();
      tuple.assign(r, 0);
      args.resize(r);
      for (std::size_t t = 0; t < entries; ++t) {
        for (std::size_t i = 0; i < r; ++i) args[i] = inv[tuple[i]];
        code.push_back(label[alg_.apply(op, args)]);
        for (std::size_t i = r; i-- > 0;) {
          if (++tuple[i] < k_) break;
          tuple[i] = 0;
        }
      }
    }
    return code;
  }

  void leaf(const std::vector<std::uint32_t>& label) {
    auto code = code_for(label);
    if (best_label_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_label_.assign(label.begin(), label.end());
      return;
    }
    if (code == best_code_) {
      std::vector<Element> best_inv(k_);
      for (std::size_t a = 0; a < k_; ++a) best_inv[best_label_[a]] = static_cast<Element>(a);
      std::vector<Element> gamma(k_);
      for (std::size_t a = 0; a < k_; ++a) gamma[a] = best_inv[label[a]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit representative of each element under the found automorphisms that
  // fix every element of path.
  std::vector<Element> orbits(const std::vector<Element>& path) const {
    std::vector<Element> parent(k_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](Element x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Element p) { return g[p] == p; });
      if (!fixes) continue;
      for (std::size_t a = 0; a < k_; ++a) {
        Element x = find(static_cast<Element>(a)), y = find(g[a]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (std::size_t a = 0; a < k_; ++a) parent[a] = find(static_cast<Element>(a));
    return parent;
  }

  void search(const std::vector<std::uint32_t>& colors, std::vector<Element>& path) {
    std::vector<std::size_t> cell_size(k_, 0);
    for (auto c : colors) ++cell_size[c];
    std::uint32_t target = UINT32_MAX;
    for (std::uint32_t c = 0; c < k_; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target == UINT32_MAX) {
      leaf(colors);
      return;
    }
    std::vector<Element> explored;
    std::size_t seen_autos = SIZE_MAX;
    std::vector<Element> orbit;
    for (Element v = 0; v < k_; ++v) {
      if (colors[v] != target) continue;
      if (!explored.empty()) {
        if (seen_autos != automorphisms_.size()) {
          orbit = orbits(path);
          seen_autos = automorphisms_.size();
        }
        bool redundant = std::any_of(explored.begin(), explored.end(), [&](Element u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      explored.push_back(v);
      std::vector<std::uint32_t> next(k_);
      for (std::size_t a = 0; a < k_; ++a) next[a] = 2 * colors[a] + ((colors[a] == target && a != v) ? 1 : 0);
      path.push_back(v);
      search(refine(std::move(next)), path);
      path.pop_back();
    }
  }

  const FiniteAlgebra& alg_;
  std::size_t k_;
  std::vector<Element> best_code_;
  std::vector<Element> best_label_;
  std::vector<std::vector<Element>> automorphisms_;
};

}  // namespace

ElementMap canonical_labeling(const FiniteAlgebra& alg) { return Canonizer(alg).run(); }

FiniteAlgebra canonical_form(const FiniteAlgebra& alg) { return relabel(alg, canonical_labeling(alg)); }

std::string canonical_code(const FiniteAlgebra& alg) {
  const auto canon = canonical_form(alg);
  const bool wide = canon.size() > 0xffff;
  std::string out;
  auto put = [&](std::uint32_t v, bool w) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    if (w) {
      out.push_back(static_cast<char>((v >> 16) & 0xff));
      out.push_back(static_cast<char>((v >> 24) & 0xff));
    }
  };
  put(static_cast<std::uint32_t>(canon.size()), true);
  for (const auto& table : canon.tables())
    for (Element v : table) put(v, wide);
  return out;
}

}  // namespace qadm
