#include "qadm/partition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace qadm {

Partition::Partition(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (auto& l : labels_) {
    auto [it, inserted] = renumber.try_emplace(l, static_cast<std::uint32_t>(renumber.size()));
    l = it->second;
  }
  blocks_ = renumber.size();
}

Partition Partition::discrete(std::size_t k) {
  std::vector<std::uint32_t> labels(k);
  std::iota(labels.begin(), labels.end(), 0u);
  return Partition(std::move(labels));
}

Partition Partition::indiscrete(std::size_t k) { return Partition(std::vector<std::uint32_t>(k, 0)); }

bool Partition::refines(const Partition& other) const {
  if (other.universe_size() != universe_size()) throw std::invalid_argument("partition size mismatch");
  std::vector<std::uint32_t> target(blocks_, UINT32_MAX);
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    auto& t = target[labels_[a]];
    if (t == UINT32_MAX)
      t = other.labels_[a];
    else if (t != other.labels_[a])
      return false;
  }
  return true;
}

std::vector<Element> Partition::representatives() const {
  std::vector<Element> reps(blocks_, 0);
  std::vector<bool> seen(blocks_, false);
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    if (!seen[labels_[a]]) {
      seen[labels_[a]] = true;
      reps[labels_[a]] = static_cast<Element>(a);
    }
  }
  return reps;
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(blocks_);
  for (std::size_t a = 0; a < labels_.size(); ++a) out[labels_[a]].push_back(static_cast<Element>(a));
  return out;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.universe_size() != b.universe_size()) throw std::invalid_argument("partition size mismatch");
  const std::size_t k = a.universe_size();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto key = std::make_pair(a.block_of(static_cast<Element>(i)), b.block_of(static_cast<Element>(i)));
    labels[i] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return Partition(std::move(labels));
}

Partition join(const Partition& a, const Partition& b) {
  if (a.universe_size() != b.universe_size()) throw std::invalid_argument("partition size mismatch");
  const std::size_t k = a.universe_size();
  std::vector<std::uint32_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Partition* p : {&a, &b}) {
    auto reps = p->representatives();
    for (std::size_t i = 0; i < k; ++i) {
      auto x = find(static_cast<std::uint32_t>(i));
      auto y = find(reps[p->block_of(static_cast<Element>(i))]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<std::uint32_t> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = find(static_cast<std::uint32_t>(i));
  return Partition(std::move(labels));
}

Partition meet_all(std::size_t universe_size, std::span<const Partition> parts) {
  Partition result = Partition::indiscrete(universe_size);
  for (const auto& p : parts) result = meet(result, p);
  return result;
}

}  // namespace qadm
