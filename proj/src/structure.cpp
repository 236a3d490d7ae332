#include "qadm/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "qadm/congruence.hpp"
#include "qadm/errors.hpp"
#include "tuples.hpp"

namespace qadm {

namespace {

void check_table_budget(const Signature& sig, std::uint64_t size, const Limits& limits) {
  std::uint64_t total = 0;
  for (const auto& s : sig.symbols()) total += checked_power(size, s.arity);
  if (total > limits.max_table_entries)
    throw ResourceLimitError("table entries", limits.max_table_entries, total);
}

}  // namespace

FiniteAlgebra product(std::span<const FiniteAlgebra> algs, const Limits& limits) {
  if (algs.empty()) throw std::invalid_argument("product of an empty family");
  const auto& sig = algs[0].signature();
  std::uint64_t n = 1;
  for (const auto& a : algs) {
    require_same_signature(sig, a.signature());
    if (n > UINT32_MAX / a.size()) throw ResourceLimitError("algebra size", UINT32_MAX, n * a.size());
    n *= a.size();
  }
  check_table_budget(sig, n, limits);

  const std::size_t m = algs.size();
  std::vector<std::vector<Element>> comps(n, std::vector<Element>(m));
  for (std::uint64_t e = 0; e < n; ++e) comps[e] = product_components(algs, static_cast<Element>(e));

  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t r = sig[op].arity;
    const std::uint64_t entries = checked_power(n, r);
    auto& table = tables[op];
    table.resize(entries);
    std::vector<std::size_t> tuple(r, 0);
    for (std::uint64_t t = 0; t < entries; ++t) {
      Element value = 0;
      for (std::size_t c = 0; c < m; ++c) {
        args.resize(r);
        for (std::size_t i = 0; i < r; ++i) args[i] = comps[tuple[i]][c];
        value = value * static_cast<Element>(algs[c].size()) + algs[c].apply(op, args);
      }
      table[t] = value;
      for (std::size_t i = r; i-- > 0;) {
        if (++tuple[i] < n) break;
        tuple[i] = 0;
      }
    }
  }
  std::string name;
  for (const auto& a : algs) name += (name.empty() ? "" : "x") + a.name();
  return FiniteAlgebra(algs[0].signature_ptr(), name, n, std::move(tables));
}

std::vector<Element> product_components(std::span<const FiniteAlgebra> algs, Element e) {
  std::vector<Element> out(algs.size());
  for (std::size_t c = algs.size(); c-- > 0;) {
    out[c] = e % algs[c].size();
    e /= static_cast<Element>(algs[c].size());
  }
  return out;
}

std::pair<FiniteAlgebra, ElementMap> quotient(const FiniteAlgebra& alg, const Partition& theta) {
  if (theta.universe_size() != alg.size()) throw std::invalid_argument("partition has wrong universe size");
  if (!is_congruence(alg, theta)) throw std::invalid_argument("partition is not a congruence");
  const auto reps = theta.representatives();
  const std::size_t n = theta.block_count();
  const auto& sig = alg.signature();
  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t r = sig[op].arity;
    const std::uint64_t entries = checked_power(n, r);
    std::vector<std::size_t> tuple(r, 0);
    args.resize(r);
    tables[op].resize(entries);
    for (std::uint64_t t = 0; t < entries; ++t) {
      for (std::size_t i = 0; i < r; ++i) args[i] = reps[tuple[i]];
      tables[op][t] = theta.block_of(alg.apply(op, args));
      for (std::size_t i = r; i-- > 0;) {
        if (++tuple[i] < n) break;
        tuple[i] = 0;
      }
    }
  }
  ElementMap map{theta.labels()};
  return {FiniteAlgebra(alg.signature_ptr(), alg.name() + "_q", n, std::move(tables)), std::move(map)};
}

FiniteAlgebra restrict_to(const FiniteAlgebra& alg, std::span<const Element> subuniverse) {
  const std::size_t n = subuniverse.size();
  if (n == 0) throw std::invalid_argument("empty subuniverse");
  std::vector<Element> pos(alg.size(), UINT32_MAX);
  for (std::size_t i = 0; i < n; ++i) pos[subuniverse[i]] = static_cast<Element>(i);
  const auto& sig = alg.signature();
  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t r = sig[op].arity;
    const std::uint64_t entries = checked_power(n, r);
    std::vector<std::size_t> tuple(r, 0);
    args.resize(r);
    tables[op].resize(entries);
    for (std::uint64_t t = 0; t < entries; ++t) {
      for (std::size_t i = 0; i < r; ++i) args[i] = subuniverse[tuple[i]];
      Element v = pos[alg.apply(op, args)];
      if (v == UINT32_MAX) throw std::invalid_argument("set is not closed under the operations");
      tables[op][t] = v;
      for (std::size_t i = r; i-- > 0;) {
        if (++tuple[i] < n) break;
        tuple[i] = 0;
      }
    }
  }
  return FiniteAlgebra(alg.signature_ptr(), alg.name() + "_s", n, std::move(tables));
}

std::pair<FiniteAlgebra, ElementMap> generated_subalgebra(const FiniteAlgebra& alg,
                                                          std::span<const Element> seed) {
  std::vector<Element> members(seed.begin(), seed.end());
  for (Element e : members)
    if (e >= alg.size()) throw std::invalid_argument("seed element out of range");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubuniverseCloser closer(alg);
  closer.close(members, 0, alg.size());
  if (members.empty())
    throw std::invalid_argument("empty seed generates no subalgebra in a signature without constants");
  auto sub = restrict_to(alg, members);
  return {std::move(sub), ElementMap{std::move(members)}};
}

FiniteAlgebra minimal_subalgebra(const FiniteAlgebra& alg) {
  if (alg.signature().has_constants()) return generated_subalgebra(alg, {}).first;
  SubuniverseCloser closer(alg);
  std::vector<Element> best;
  std::vector<Element> members;
  for (Element a = 0; a < alg.size(); ++a) {
    members.assign(1, a);
    const std::size_t limit = best.empty() ? alg.size() : best.size() - 1;
    if (closer.close(members, 0, limit)) {
      best = members;
      if (best.size() == 1) break;
    }
  }
  return restrict_to(alg, best);
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const ElementMap& h) {
  require_same_signature(a.signature(), b.signature());
  if (h.size() != a.size()) return false;
  for (Element x : h.image)
    if (x >= b.size()) return false;
  const auto& sig = a.signature();
  std::vector<Element> args, mapped;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t r = sig[op].arity;
    const std::uint64_t entries = checked_power(a.size(), r);
    std::vector<std::size_t> tuple(r, 0);
    args.resize(r);
    mapped.resize(r);
    for (std::uint64_t t = 0; t < entries; ++t) {
      for (std::size_t i = 0; i < r; ++i) {
        args[i] = static_cast<Element>(tuple[i]);
        mapped[i] = h(args[i]);
      }
      if (h(a.table(op)[t]) != b.apply(op, mapped)) return false;
      for (std::size_t i = r; i-- > 0;) {
        if (++tuple[i] < a.size()) break;
        tuple[i] = 0;
      }
    }
  }
  return true;
}

SubuniverseCloser::SubuniverseCloser(const FiniteAlgebra& alg) : alg_(alg), mark_(alg.size(), 0) {
  const auto& sig = alg.signature();
  for (std::size_t op = 0; op < sig.size(); ++op)
    (sig[op].arity == 0 ? constant_ops_ : nonconstant_ops_).push_back(op);
}

bool SubuniverseCloser::close(std::vector<Element>& members, std::size_t closed_prefix, std::size_t limit) {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  for (Element e : members) mark_[e] = epoch_;
  auto add = [&](Element v) {
    if (mark_[v] == epoch_) return true;
    mark_[v] = epoch_;
    members.push_back(v);
    return members.size() <= limit;
  };
  if (closed_prefix == 0) {
    for (std::size_t op : constant_ops_)
      if (!add(alg_.table(op)[0])) return false;
  }
  if (members.size() > limit) return false;
  std::vector<std::size_t> idx;
  std::size_t done = closed_prefix;
  const auto& sig = alg_.signature();
  while (done < members.size()) {
    const std::size_t n = members.size();
    for (std::size_t op : nonconstant_ops_) {
      const std::size_t r = sig[op].arity;
      args_.resize(r);
      const auto table = alg_.table(op);
      const std::size_t k = alg_.size();
      bool ok = detail::for_each_new_tuple(r, n, done, idx, [&](const std::vector<std::size_t>& t) {
        std::size_t pos = 0;
        for (std::size_t i = 0; i < r; ++i) pos = pos * k + members[t[i]];
        return add(table[pos]);
      });
      if (!ok) return false;
    }
    done = n;
  }
  return true;
}

}  // namespace qadm
