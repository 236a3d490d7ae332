#include "qadm/homomorphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tuples.hpp"

namespace qadm {

namespace {

constexpr std::size_t kGenerator = std::numeric_limits<std::size_t>::max();

// Discovery order of A split into levels: level 0 is generated by the
// constants, each later level adds one generator and its closure.
struct GenerationPlan {
  std::vector<Element> order;
  std::vector<std::size_t> level_begin;  // level i covers [level_begin[i], level_begin[i+1])
  std::vector<std::size_t> op;           // kGenerator for generators
  std::vector<std::vector<Element>> args;
};

GenerationPlan make_plan(const FiniteAlgebra& a) {
  const auto& sig = a.signature();
  const std::size_t k = a.size();
  GenerationPlan plan;
  std::vector<bool> in(k, false);
  std::vector<std::size_t> idx;
  std::vector<Element> argv;

  auto add = [&](Element v, std::size_t op, std::vector<Element> args) {
    if (in[v]) return;
    in[v] = true;
    plan.order.push_back(v);
    plan.op.push_back(op);
    plan.args.push_back(std::move(args));
  };
  auto close_from = [&](std::size_t done) {
    while (done < plan.order.size()) {
      const std::size_t n = plan.order.size();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        const std::size_t r = sig[op].arity;
        if (r == 0) continue;
        argv.resize(r);
        detail::for_each_new_tuple(r, n, done, idx, [&](const std::vector<std::size_t>& t) {
          for (std::size_t i = 0; i < r; ++i) argv[i] = plan.order[t[i]];
          Element v = a.apply(op, argv);
          if (!in[v]) add(v, op, argv);
          return true;
        });
      }
      done = n;
    }
  };

  plan.level_begin.push_back(0);
  for (std::size_t op = 0; op < sig.size(); ++op)
    if (sig[op].arity == 0) add(a.table(op)[0], op, {});
  close_from(0);
  for (Element g = 0; g < k; ++g) {
    if (in[g]) continue;
    const std::size_t begin = plan.order.size();
    plan.level_begin.push_back(begin);
    add(g, kGenerator, {});
    close_from(begin);
  }
  plan.level_begin.push_back(plan.order.size());
  return plan;
}

// Per-element invariants preserved by homomorphisms.
struct Profile {
  std::vector<std::uint64_t> idempotent;  // bit per op: f(a,...,a) = a
  // For each unary op: (tail, cycle) of the sequence a, u(a), u(u(a)), ...
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> orbits;
};

Profile make_profile(const FiniteAlgebra& a) {
  const auto& sig = a.signature();
  const std::size_t k = a.size();
  Profile p;
  p.idempotent.assign(k, 0);
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.size() && op < 64; ++op) {
    const std::size_t r = sig[op].arity;
    if (r == 0) continue;
    for (Element x = 0; x < k; ++x) {
      args.assign(r, x);
      if (a.apply(op, args) == x) p.idempotent[x] |= std::uint64_t{1} << op;
    }
  }
  std::vector<std::uint32_t> seen_at(k);
  std::vector<Element> touched;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity != 1) continue;
    auto table = a.table(op);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> orb(k);
    std::fill(seen_at.begin(), seen_at.end(), UINT32_MAX);
    for (Element x = 0; x < k; ++x) {
      touched.clear();
      Element y = x;
      std::uint32_t step = 0;
      while (seen_at[y] == UINT32_MAX) {
        seen_at[y] = step++;
        touched.push_back(y);
        y = table[y];
      }
      orb[x] = {seen_at[y], step - seen_at[y]};
      for (Element t : touched) seen_at[t] = UINT32_MAX;
    }
    p.orbits.push_back(std::move(orb));
  }
  return p;
}

class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, HomMode mode, const ImageFilter& allowed)
      : a_(a),
        b_(b),
        allowed_(allowed),
        injective_(mode == HomMode::injective ||
                   (mode == HomMode::surjective && a.size() == b.size())),
        surjective_(mode == HomMode::surjective),
        plan_(make_plan(a)),
        pa_(make_profile(a)),
        pb_(make_profile(b)),
        h_(a.size(), UINT32_MAX),
        hits_(b.size(), 0) {}

  std::optional<ElementMap> run() {
    if (injective_ && a_.size() > b_.size()) return std::nullopt;
    if (surjective_ && a_.size() < b_.size()) return std::nullopt;
    if (search(0)) return ElementMap{h_};
    return std::nullopt;
  }

 private:
  bool compatible(Element x, Element y) const {
    if (allowed_ && !allowed_(x, y)) return false;
    if (injective_) {
      if (pa_.idempotent[x] != pb_.idempotent[y]) return false;
      for (std::size_t u = 0; u < pa_.orbits.size(); ++u)
        if (pa_.orbits[u][x] != pb_.orbits[u][y]) return false;
    } else {
      if ((pa_.idempotent[x] & ~pb_.idempotent[y]) != 0) return false;
      for (std::size_t u = 0; u < pa_.orbits.size(); ++u) {
        auto [ta, ca] = pa_.orbits[u][x];
        auto [tb, cb] = pb_.orbits[u][y];
        if (tb > ta || ca % cb != 0) return false;
      }
    }
    return true;
  }

  bool set_image(Element x, Element y) {
    if (injective_ && hits_[y] != 0) return false;
    if (!compatible(x, y)) return false;
    h_[x] = y;
    if (hits_[y]++ == 0) ++distinct_;
    return true;
  }

  void clear_image(Element x) {
    Element y = h_[x];
    if (y == UINT32_MAX) return;
    if (--hits_[y] == 0) --distinct_;
    h_[x] = UINT32_MAX;
  }

  void undo(std::size_t from, std::size_t to) {
    for (std::size_t pos = from; pos < to; ++pos) clear_image(plan_.order[pos]);
  }

  // Forces images of the non-generator elements of a level and checks every
  // operation entry whose arguments reach into the level.
  bool complete_level(std::size_t level) {
    const std::size_t begin = plan_.level_begin[level];
    const std::size_t end = plan_.level_begin[level + 1];
    std::vector<Element> mapped;
    for (std::size_t pos = begin; pos < end; ++pos) {
      if (plan_.op[pos] == kGenerator) continue;
      const auto& args = plan_.args[pos];
      mapped.resize(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) mapped[i] = h_[args[i]];
      if (!set_image(plan_.order[pos], b_.apply(plan_.op[pos], mapped))) {
        undo(begin, end);
        return false;
      }
    }
    const auto& sig = a_.signature();
    std::vector<std::size_t> idx;
    std::vector<Element> argv;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t r = sig[op].arity;
      if (r == 0) continue;
      argv.resize(r);
      mapped.resize(r);
      bool ok = detail::for_each_new_tuple(r, end, begin, idx, [&](const std::vector<std::size_t>& t) {
        for (std::size_t i = 0; i < r; ++i) {
          argv[i] = plan_.order[t[i]];
          mapped[i] = h_[argv[i]];
        }
        return h_[a_.apply(op, argv)] == b_.apply(op, mapped);
      });
      if (!ok) {
        undo(begin, end);
        return false;
      }
    }
    if (surjective_) {
      const std::size_t remaining = a_.size() - end;
      if (distinct_ + remaining < b_.size()) {
        undo(begin, end);
        return false;
      }
    }
    return true;
  }

  bool search(std::size_t level) {
    if (level + 1 == plan_.level_begin.size()) return !surjective_ || distinct_ == b_.size();
    const std::size_t begin = plan_.level_begin[level];
    const std::size_t end = plan_.level_begin[level + 1];
    if (begin < end && plan_.op[begin] == kGenerator) {
      const Element g = plan_.order[begin];
      for (Element y = 0; y < b_.size(); ++y) {
        if (!set_image(g, y)) continue;
        if (complete_level(level)) {
          if (search(level + 1)) return true;
          undo(begin, end);
        } else {
          clear_image(g);
        }
      }
      return false;
    }
    if (!complete_level(level)) return false;
    if (search(level + 1)) return true;
    undo(begin, end);
    return false;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  const ImageFilter& allowed_;
  bool injective_;
  bool surjective_;
  GenerationPlan plan_;
  Profile pa_;
  Profile pb_;
  std::vector<Element> h_;
  std::vector<std::uint32_t> hits_;
  std::size_t distinct_ = 0;
};

}  // namespace

std::optional<ElementMap> find_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, HomMode mode,
                                            const ImageFilter& allowed) {
  require_same_signature(a.signature(), b.signature());
  HomSearch search(a, b, mode, allowed);
  return search.run();
}

bool embeds(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return find_homomorphism(a, b, HomMode::injective).has_value();
}

bool is_homomorphic_image(const FiniteAlgebra& image, const FiniteAlgebra& source) {
  return find_homomorphism(source, image, HomMode::surjective).has_value();
}

bool are_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.size() == b.size() && embeds(a, b);
}

FiniteAlgebra relabel(const FiniteAlgebra& alg, const ElementMap& perm) {
  const std::size_t k = alg.size();
  std::vector<Element> inv(k);
  for (Element x = 0; x < k; ++x) inv[perm(x)] = x;
  const auto& sig = alg.signature();
  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t r = sig[op].arity;
    auto& table = tables[op];
    table.resize(alg.table(op).size());
    std::vector<std::size_t> tuple(r, 0);
    args.resize(r);
    for (std::size_t t = 0; t < table.size(); ++t) {
      for (std::size_t i = 0; i < r; ++i) args[i] = inv[tuple[i]];
      table[t] = perm(alg.apply(op, args));
      for (std::size_t i = r; i-- > 0;) {
        if (++tuple[i] < k) break;
        tuple[i] = 0;
      }
    }
  }
  return FiniteAlgebra(alg.signature_ptr(), alg.name(), k, std::move(tables));
}

}  // namespace qadm
