#include "qadm/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

#include "qadm/congruence.hpp"
#include "qadm/program.hpp"

namespace qadm::kernels {

namespace {

std::atomic<int> g_threads{0};

int threads() {
  int t = g_threads.load();
  return t > 0 ? t : omp_get_max_threads();
}

std::vector<ElementPair> all_pairs(std::size_t k) {
  std::vector<ElementPair> pairs;
  pairs.reserve(k * (k - 1) / 2);
  for (Element a = 0; a < k; ++a)
    for (Element b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  return pairs;
}

std::uint64_t assignment_count(std::size_t k, std::size_t vars) { return checked_power(k, vars); }

void decode(std::uint64_t index, std::size_t k, std::vector<Element>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Element>(index % k);
    index /= k;
  }
}

// Scans [lo, hi) with incremental re-evaluation; returns the first failing
// index or hi.
std::uint64_t scan_range(const ClauseProgram& program, const FiniteAlgebra& alg, std::span<const char> designated,
                         std::uint64_t lo, std::uint64_t hi) {
  const std::size_t m = program.variable_count();
  const std::size_t k = alg.size();
  std::vector<Element> digits(m);
  std::vector<Element> values;
  decode(lo, k, digits);
  program.evaluate(alg, digits, values);
  for (std::uint64_t i = lo; i < hi; ++i) {
    if (program.fails(values, designated)) return i;
    if (i + 1 == hi) break;
    std::size_t j = m;
    while (j-- > 0) {
      if (++digits[j] < k) break;
      digits[j] = 0;
    }
    program.evaluate_nodes(alg, digits, program.dirty_nodes(j), values);
  }
  return hi;
}

void coordinatewise(std::size_t op, std::size_t arity, std::span<const CoordinateBlock> blocks, std::size_t len,
                    std::span<const std::uint16_t> coords, const Element* tuple, std::uint16_t* out) {
  for (const auto& block : blocks) {
    const auto table = block.algebra->table(op);
    const std::size_t k = block.algebra->size();
    for (std::size_t c = block.begin; c < block.end; ++c) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < arity; ++i) idx = idx * k + coords[std::size_t{tuple[i]} * len + c];
      out[c] = static_cast<std::uint16_t>(table[idx]);
    }
  }
}

}  // namespace

void set_thread_count(int t) { g_threads.store(t); }
int thread_count() { return threads(); }

namespace serial {

PrincipalCongruences principal_congruences(const FiniteAlgebra& alg) {
  PrincipalCongruences out;
  for (auto pair : all_pairs(alg.size())) out.by_pair.push_back(congruence_closure(alg, std::span(&pair, 1)));
  return out;
}

FirstFailure first_failure(const ClauseProgram& program, const FiniteAlgebra& alg, std::span<const char> designated) {
  const std::uint64_t total = assignment_count(alg.size(), program.variable_count());
  std::vector<Element> digits(program.variable_count());
  std::vector<Element> values;
  for (std::uint64_t i = 0; i < total; ++i) {
    decode(i, alg.size(), digits);
    program.evaluate(alg, digits, values);
    if (program.fails(values, designated)) return i;
  }
  return std::nullopt;
}

void apply_coordinatewise(std::size_t op, std::size_t arity, std::span<const CoordinateBlock> blocks,
                          std::size_t len, std::span<const std::uint16_t> coords, std::span<const Element> tuples,
                          std::span<std::uint16_t> out) {
  const std::size_t count = arity == 0 ? 1 : tuples.size() / arity;
  for (std::size_t t = 0; t < count; ++t)
    coordinatewise(op, arity, blocks, len, coords, tuples.data() + t * arity, out.data() + t * len);
}

}  // namespace serial

namespace parallel {

PrincipalCongruences principal_congruences(const FiniteAlgebra& alg) {
  const auto pairs = all_pairs(alg.size());
  PrincipalCongruences out;
  out.by_pair.resize(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads())
  for (std::int64_t i = 0; i < n; ++i)
    out.by_pair[i] = congruence_closure(alg, std::span(&pairs[i], 1));
  return out;
}

FirstFailure first_failure(const ClauseProgram& program, const FiniteAlgebra& alg, std::span<const char> designated) {
  const std::uint64_t total = assignment_count(alg.size(), program.variable_count());
  if (total == 0) return std::nullopt;
  const int nthreads = threads();
  if (nthreads <= 1 || total < 4096) {
    auto i = scan_range(program, alg, designated, 0, total);
    return i < total ? FirstFailure(i) : std::nullopt;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(nthreads) * 32);
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> best{total};
  const auto nchunks = static_cast<std::int64_t>((total + step - 1) / step);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * step;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t hi = std::min(total, lo + step);
    const std::uint64_t found = scan_range(program, alg, designated, lo, hi);
    if (found < hi) {
      std::uint64_t cur = best.load();
      while (found < cur && !best.compare_exchange_weak(cur, found)) {
      }
    }
  }
  const std::uint64_t b = best.load();
  return b < total ? FirstFailure(b) : std::nullopt;
}

void apply_coordinatewise(std::size_t op, std::size_t arity, std::span<const CoordinateBlock> blocks,
                          std::size_t len, std::span<const std::uint16_t> coords, std::span<const Element> tuples,
                          std::span<std::uint16_t> out) {
  const auto count = static_cast<std::int64_t>(arity == 0 ? 1 : tuples.size() / arity);
#pragma omp parallel for schedule(static) num_threads(threads()) if (static_cast<std::size_t>(count) * len > 65536)
  for (std::int64_t t = 0; t < count; ++t)
    coordinatewise(op, arity, blocks, len, coords, tuples.data() + t * arity, out.data() + t * len);
}

}  // namespace parallel

}  // namespace qadm::kernels
