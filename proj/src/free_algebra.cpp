#include "qadm/free_algebra.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "qadm/errors.hpp"
#include "tuples.hpp"

namespace qadm {

namespace {

class TupleIndex {
 public:
  TupleIndex(const std::vector<std::uint16_t>& coords, std::size_t len) : coords_(coords), len_(len) {
    slots_.assign(1024, kEmpty);
  }

  static constexpr std::uint32_t kEmpty = UINT32_MAX;

  std::uint32_t find(const std::uint16_t* t, std::uint64_t h) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = h & mask;; s = (s + 1) & mask) {
      std::uint32_t id = slots_[s];
      if (id == kEmpty) return kEmpty;
      if (std::memcmp(coords_.data() + std::size_t{id} * len_, t, len_ * sizeof(std::uint16_t)) == 0) return id;
    }
  }

  void insert(std::uint32_t id, std::uint64_t h) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    place(id, h);
    ++count_;
  }

  std::uint64_t hash(const std::uint16_t* t) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len_; ++i) {
      h ^= t[i];
      h *= 0x100000001b3ULL;
    }
    return h ^ (h >> 31);
  }

 private:
  void place(std::uint32_t id, std::uint64_t h) {
    std::size_t mask = slots_.size() - 1;
    std::size_t s = h & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = id;
  }

  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    for (std::uint32_t id : old)
      if (id != kEmpty) place(id, hash(coords_.data() + std::size_t{id} * len_));
  }

  const std::vector<std::uint16_t>& coords_;
  std::size_t len_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

struct Closure {
  std::size_t rank = 0;
  std::size_t len = 0;
  std::vector<std::size_t> offsets;
  std::vector<std::uint16_t> coords;
  std::vector<FreeAlgebra::Derivation> derivations;
  std::vector<Element> generators;
  std::vector<std::vector<Element>> tables;
  std::size_t size = 0;
};

Closure close_free(std::span<const FiniteAlgebra> family, std::size_t n, const Limits& limits, bool keep_tables) {
  if (family.empty()) throw std::invalid_argument("free algebra of an empty family");
  const auto& sig = family[0].signature();
  for (const auto& a : family) {
    require_same_signature(sig, a.signature());
    if (a.size() > 0xffff) throw std::invalid_argument("family member too large for free algebra coordinates");
  }
  if (n == 0 && !sig.has_constants())
    throw std::invalid_argument("free algebra on zero generators needs a constant symbol");

  Closure c;
  c.rank = n;
  c.offsets.push_back(0);
  for (const auto& a : family) {
    std::uint64_t block = checked_power(a.size(), n);
    if (block > limits.max_free_entries)
      throw ResourceLimitError("free algebra coordinates", limits.max_free_entries, block);
    c.len += block;
    if (c.len > limits.max_free_entries)
      throw ResourceLimitError("free algebra coordinates", limits.max_free_entries, c.len);
    c.offsets.push_back(c.len);
  }
  const std::size_t len = c.len;
  std::vector<kernels::CoordinateBlock> blocks;
  for (std::size_t i = 0; i < family.size(); ++i) blocks.push_back({&family[i], c.offsets[i], c.offsets[i + 1]});

  TupleIndex index(c.coords, len);
  auto intern = [&](const std::uint16_t* t, std::uint32_t op, const Element* args, std::size_t r) -> Element {
    const std::uint64_t h = index.hash(t);
    std::uint32_t id = index.find(t, h);
    if (id != TupleIndex::kEmpty) return id;
    const std::uint64_t entries = static_cast<std::uint64_t>(c.size + 1) * len;
    if (entries > limits.max_free_entries)
      throw ResourceLimitError("free algebra coordinates", limits.max_free_entries, entries);
    c.coords.insert(c.coords.end(), t, t + len);
    c.derivations.push_back({op, std::vector<Element>(args, args + r)});
    id = static_cast<std::uint32_t>(c.size++);
    index.insert(id, h);
    return id;
  };

  std::vector<std::uint16_t> tuple(len);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t m = 0; m < family.size(); ++m) {
      const std::uint64_t k = family[m].size();
      const std::uint64_t count = c.offsets[m + 1] - c.offsets[m];
      std::uint64_t div = checked_power(k, n - 1 - g);
      for (std::uint64_t j = 0; j < count; ++j) tuple[c.offsets[m] + j] = static_cast<std::uint16_t>((j / div) % k);
    }
    Element gen = static_cast<Element>(g);
    c.generators.push_back(intern(tuple.data(), FreeAlgebra::Derivation::kGenerator, &gen, 1));
  }

  c.tables.assign(sig.size(), {});
  std::vector<Element> constant_ids(sig.size(), UINT32_MAX);
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity != 0) continue;
    for (std::size_t m = 0; m < family.size(); ++m)
      std::fill(tuple.begin() + c.offsets[m], tuple.begin() + c.offsets[m + 1],
                static_cast<std::uint16_t>(family[m].table(op)[0]));
    constant_ids[op] = intern(tuple.data(), static_cast<std::uint32_t>(op), nullptr, 0);
    c.tables[op] = {constant_ids[op]};
  }

  const std::size_t batch = std::clamp<std::size_t>((std::size_t{1} << 22) / std::max<std::size_t>(len, 1), 1, 65536);
  std::vector<Element> tuple_buf;
  std::vector<std::uint16_t> out;
  std::vector<std::size_t> idx;
  std::vector<std::uint64_t> slot_buf;
  std::size_t dim = 0;
  std::size_t done = 0;

  while (done < c.size) {
    limits.check_deadline();
    const std::size_t n_new = c.size;
    if (keep_tables) {
      std::uint64_t total = 0;
      for (const auto& s : sig.symbols()) total += checked_power(n_new, s.arity);
      if (total > limits.max_table_entries) throw ResourceLimitError("table entries", limits.max_table_entries, total);
      for (std::size_t op = 0; op < sig.size(); ++op) {
        const std::size_t r = sig[op].arity;
        if (r == 0) continue;
        std::vector<Element> grown(checked_power(n_new, r), UINT32_MAX);
        std::vector<std::size_t> t(r, 0);
        const std::uint64_t old_entries = dim == 0 ? 0 : checked_power(dim, r);
        for (std::uint64_t e = 0; e < old_entries; ++e) {
          std::size_t pos = 0;
          for (std::size_t i = 0; i < r; ++i) pos = pos * n_new + t[i];
          grown[pos] = c.tables[op][e];
          for (std::size_t i = r; i-- > 0;) {
            if (++t[i] < dim) break;
            t[i] = 0;
          }
        }
        c.tables[op].swap(grown);
      }
      dim = n_new;
    }
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t r = sig[op].arity;
      if (r == 0) continue;
      auto flush = [&]() {
        const std::size_t count = tuple_buf.size() / r;
        if (count == 0) return;
        out.resize(count * len);
        kernels::parallel::apply_coordinatewise(op, r, blocks, len, c.coords, tuple_buf, out);
        for (std::size_t t = 0; t < count; ++t) {
          Element id = intern(out.data() + t * len, static_cast<std::uint32_t>(op), tuple_buf.data() + t * r, r);
          if (keep_tables) c.tables[op][slot_buf[t]] = id;
        }
        tuple_buf.clear();
        slot_buf.clear();
      };
      detail::for_each_new_tuple(r, n_new, done, idx, [&](const std::vector<std::size_t>& t) {
        std::uint64_t pos = 0;
        for (std::size_t i = 0; i < r; ++i) {
          tuple_buf.push_back(static_cast<Element>(t[i]));
          pos = pos * n_new + t[i];
        }
        slot_buf.push_back(pos);
        if (slot_buf.size() == batch) flush();
        return true;
      });
      flush();
    }
    done = n_new;
  }
  return c;
}

}  // namespace

FreeAlgebra free_algebra(std::span<const FiniteAlgebra> family, std::size_t n, const Limits& limits) {
  Closure c = close_free(family, n, limits, true);
  FreeAlgebra f;
  std::string name = "F";
  for (const auto& a : family) name += "_" + a.name();
  name += "_" + std::to_string(n);
  f.base_ = std::make_shared<const FiniteAlgebra>(family[0].signature_ptr(), name, c.size, std::move(c.tables));
  f.rank_ = n;
  f.generators_ = std::move(c.generators);
  f.family_.assign(family.begin(), family.end());
  f.tuple_length_ = c.len;
  f.offsets_ = std::move(c.offsets);
  f.coords_ = std::move(c.coords);
  f.derivations_ = std::move(c.derivations);
  return f;
}

std::size_t free_size(std::span<const FiniteAlgebra> family, std::size_t n, const Limits& limits) {
  return close_free(family, n, limits, false).size;
}

std::uint64_t free_size_bound(std::span<const FiniteAlgebra> family, std::size_t n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t bound = 1;
  for (const auto& a : family) {
    std::uint64_t exponent;
    try {
      exponent = checked_power(a.size(), n);
    } catch (const ResourceLimitError&) {
      return a.size() > 1 ? kMax : bound;
    }
    for (std::uint64_t i = 0; i < exponent; ++i) {
      if (a.size() > 1 && bound > kMax / a.size()) return kMax;
      bound *= a.size();
      if (a.size() == 1) break;
    }
  }
  return bound;
}

Term FreeAlgebra::witness(Element e) const {
  if (witness_cache_.size() != size()) witness_cache_.assign(size(), nullptr);
  const auto& sig = base_->signature();
  for (Element id = 0; id <= e; ++id) {
    if (witness_cache_[id]) continue;
    const auto& d = derivations_[id];
    if (d.op == Derivation::kGenerator) {
      witness_cache_[id] = std::make_shared<Term>(Term::variable("x" + std::to_string(d.args[0] + 1)));
      continue;
    }
    std::vector<Term> args;
    for (Element a : d.args) args.push_back(*witness_cache_[a]);
    witness_cache_[id] = std::make_shared<Term>(Term::apply(sig, d.op, std::move(args)));
  }
  return *witness_cache_[e];
}

ElementMap FreeAlgebra::projection(std::size_t member, std::uint64_t assignment) const {
  if (member >= family_.size()) throw std::out_of_range("family member index");
  if (assignment >= offsets_[member + 1] - offsets_[member]) throw std::out_of_range("assignment index");
  ElementMap h;
  h.image.resize(size());
  const std::size_t col = offsets_[member] + assignment;
  for (std::size_t e = 0; e < size(); ++e) h.image[e] = coords_[e * tuple_length_ + col];
  return h;
}

}  // namespace qadm
