#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace qadm {

struct Limits {
  // Total coordinate entries (elements x tuple length) a free algebra may hold.
  std::uint64_t max_free_entries = 2'000'000;
  // Total operation-table entries a constructed algebra may hold.
  std::uint64_t max_table_entries = std::uint64_t{1} << 26;
  // Assignments enumerated by a single validity or consequence check.
  std::uint64_t assignment_budget = std::uint64_t{1} << 32;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  // Throws ResourceLimitError("time limit", ...) once the deadline has passed.
  void check_deadline() const;
};

inline const Limits& default_limits() {
  static const Limits limits;
  return limits;
}

}  // namespace qadm
