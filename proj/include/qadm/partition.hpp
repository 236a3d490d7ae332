#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "qadm/algebra.hpp"

namespace qadm {

// Equivalence relation on 0..k-1 as a block-id tuple. Block ids are numbered
// in order of first occurrence, so equal relations have equal tuples.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> labels);

  static Partition discrete(std::size_t k);
  static Partition indiscrete(std::size_t k);

  std::size_t universe_size() const { return labels_.size(); }
  std::size_t block_count() const { return blocks_; }
  std::uint32_t block_of(Element a) const { return labels_[a]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  bool related(Element a, Element b) const { return labels_[a] == labels_[b]; }
  bool is_discrete() const { return blocks_ == labels_.size(); }
  bool is_indiscrete() const { return blocks_ <= 1; }
  // True when every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  // Least element of each block, indexed by block id.
  std::vector<Element> representatives() const;
  std::vector<std::vector<Element>> blocks() const;

  bool operator==(const Partition& other) const { return labels_ == other.labels_; }
  std::strong_ordering operator<=>(const Partition& other) const {
    return labels_ <=> other.labels_;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t blocks_ = 0;
};

Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);
// Intersection of all given partitions; the empty meet is the full relation.
Partition meet_all(std::size_t universe_size, std::span<const Partition> parts);

}  // namespace qadm
