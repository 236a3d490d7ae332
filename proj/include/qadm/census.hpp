#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qadm/algebra.hpp"
#include "qadm/limits.hpp"

namespace qadm {

// One algebra per isomorphism class of single-operation algebras of the given
// size and arity, each the lexicographically least table of its class, in
// increasing table order. Throws ResourceLimitError("groupoid tables") when
// size^(size^arity) passes max_tables.
std::vector<FiniteAlgebra> enumerate_groupoids(std::size_t size, std::size_t arity,
                                               std::uint64_t max_tables = std::uint64_t{1} << 24);

enum class ClassStatus { ok, skipped };

struct ClassRecord {
  std::size_t index = 0;
  std::vector<Element> table;
  ClassStatus status = ClassStatus::ok;
  std::string reason;                    // why a class was skipped
  bool sc = false;
  bool asc = false;
  std::size_t cover_size = 0;            // least |F_A(m)| having A as a homomorphic image
  std::vector<std::size_t> free_sizes;   // |F_D(m)| per generating algebra
  std::vector<std::size_t> basis_sizes;
  std::vector<std::vector<Element>> basis_tables;  // only with full_admalgs
};

// One line of key=value fields; parse_record returns nullopt for lines that
// are not complete records (comments, truncated tails).
std::string format_record(const ClassRecord& r);
std::optional<ClassRecord> parse_record(const std::string& line);

struct CensusOptions {
  std::size_t size = 3;
  std::size_t arity = 2;
  bool full_admalgs = false;
  std::size_t stride = 1;  // process every stride-th class
  int jobs = 0;            // 0 = OpenMP default
  std::optional<std::chrono::duration<double>> class_timeout;
  std::string out;         // record file, empty for none
  std::string resume;      // earlier record file to reuse
  Limits limits;
};

struct CensusReport {
  std::size_t class_count = 0;   // classes processed
  std::size_t total_classes = 0; // classes enumerated
  std::size_t sc_count = 0;
  std::size_t asc_only_count = 0;  // almost structurally complete but not structurally complete
  std::size_t neither_count = 0;
  std::size_t skipped_count = 0;
  std::size_t min_free_size = 0;  // over cover sizes
  std::size_t max_free_size = 0;
  std::size_t max_basis_algebra_size = 0;
  std::vector<ClassRecord> records;  // by index
};

// Classifies one algebra; resource failures become skipped records.
ClassRecord classify(std::size_t index, const FiniteAlgebra& alg, bool full_admalgs, const Limits& limits,
                     std::optional<std::chrono::duration<double>> timeout = std::nullopt);

CensusReport summarize(std::vector<ClassRecord> records, std::size_t total_classes);
CensusReport run_census(const CensusOptions& options);

void print_report(std::ostream& os, const CensusReport& report);

}  // namespace qadm
