#include "qadm/census.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "qadm/admissibility.hpp"
#include "qadm/errors.hpp"
#include "qadm/homomorphism.hpp"
#include "qadm/kernels.hpp"

namespace qadm {

std::vector<FiniteAlgebra> enumerate_groupoids(std::size_t size, std::size_t arity, std::uint64_t max_tables) {
  if (size == 0) throw std::invalid_argument("groupoid size must be positive");
  const std::uint64_t entries = checked_power(size, arity);
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < entries; ++i) {
    if (count > max_tables / size) throw ResourceLimitError("groupoid tables", max_tables, count * size);
    count *= size;
  }
  auto sig = make_signature({{"f", arity}});
  std::vector<FiniteAlgebra> out;
  std::unordered_set<std::string> seen;
  std::vector<Element> table(entries, 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    FiniteAlgebra alg(sig, "", size, {table});
    if (seen.insert(canonical_code(alg)).second) {
      alg.set_name("G" + std::to_string(out.size()));
      out.push_back(std::move(alg));
    }
    for (std::size_t i = entries; i-- > 0;) {
      if (++table[i] < size) break;
      table[i] = 0;
    }
  }
  return out;
}

namespace {

template <typename T>
std::string join_list(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s.empty() ? "-" : s;
}

template <typename T>
std::vector<T> split_list(const std::string& s) {
  std::vector<T> out;
  if (s == "-") return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(static_cast<T>(std::stoull(item)));
  return out;
}

}  // namespace

std::string format_record(const ClassRecord& r) {
  std::string s = "class=" + std::to_string(r.index) + " table=" + join_list(r.table);
  if (r.status == ClassStatus::skipped) {
    std::string reason = r.reason;
    std::replace(reason.begin(), reason.end(), ' ', '_');
    return s + " status=skipped reason=" + reason + " end";
  }
  s += " status=ok sc=" + std::string(r.sc ? "1" : "0") + " asc=" + (r.asc ? "1" : "0");
  s += " cover=" + std::to_string(r.cover_size) + " free=" + join_list(r.free_sizes) + " basis=" + join_list(r.basis_sizes);
  if (!r.basis_tables.empty()) {
    s += " basis_tables=";
    for (std::size_t i = 0; i < r.basis_tables.size(); ++i) s += (i ? ";" : "") + join_list(r.basis_tables[i]);
  }
  return s + " end";
}

std::optional<ClassRecord> parse_record(const std::string& line) {
  std::istringstream in(line);
  std::map<std::string, std::string> fields;
  std::string word;
  bool complete = false;
  while (in >> word) {
    if (word == "end") {
      complete = true;
      break;
    }
    auto eq = word.find('=');
    if (eq == std::string::npos) return std::nullopt;
    fields[word.substr(0, eq)] = word.substr(eq + 1);
  }
  if (!complete || !fields.count("class") || !fields.count("table") || !fields.count("status")) return std::nullopt;
  try {
    ClassRecord r;
    r.index = std::stoull(fields["class"]);
    r.table = split_list<Element>(fields["table"]);
    if (fields["status"] == "skipped") {
      r.status = ClassStatus::skipped;
      r.reason = fields["reason"];
      std::replace(r.reason.begin(), r.reason.end(), '_', ' ');
      return r;
    }
    if (fields["status"] != "ok") return std::nullopt;
    r.sc = fields.at("sc") == "1";
    r.asc = fields.at("asc") == "1";
    r.cover_size = std::stoull(fields.at("cover"));
    r.free_sizes = split_list<std::size_t>(fields.at("free"));
    r.basis_sizes = split_list<std::size_t>(fields.at("basis"));
    if (fields.count("basis_tables")) {
      std::stringstream tables(fields["basis_tables"]);
      std::string t;
      while (std::getline(tables, t, ';')) r.basis_tables.push_back(split_list<Element>(t));
    }
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ClassRecord classify(std::size_t index, const FiniteAlgebra& alg, bool full_admalgs, const Limits& limits,
                     std::optional<std::chrono::duration<double>> timeout) {
  ClassRecord r;
  r.index = index;
  r.table.assign(alg.table(0).begin(), alg.table(0).end());
  Limits local = limits;
  if (timeout)
    local.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(*timeout);
  try {
    auto report = completeness(std::span(&alg, 1), local);
    r.cover_size = free_with_hom_onto(alg, std::span(&alg, 1), local).free.size();
    r.sc = report.structurally_complete;
    r.asc = report.almost_structurally_complete;
    r.free_sizes = report.adm.free_sizes;
    for (const auto& b : report.adm.basis) {
      r.basis_sizes.push_back(b.size());
      if (full_admalgs) r.basis_tables.emplace_back(b.table(0).begin(), b.table(0).end());
    }
  } catch (const ResourceLimitError& e) {
    r = ClassRecord{};
    r.index = index;
    r.table.assign(alg.table(0).begin(), alg.table(0).end());
    r.status = ClassStatus::skipped;
    r.reason = e.what();
  }
  return r;
}

CensusReport summarize(std::vector<ClassRecord> records, std::size_t total_classes) {
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  CensusReport rep;
  rep.total_classes = total_classes;
  rep.class_count = records.size();
  bool any_free = false;
  for (const auto& r : records) {
    if (r.status == ClassStatus::skipped) {
      ++rep.skipped_count;
      continue;
    }
    if (r.sc) ++rep.sc_count;
    else if (r.asc) ++rep.asc_only_count;
    else ++rep.neither_count;
    rep.min_free_size = any_free ? std::min(rep.min_free_size, r.cover_size) : r.cover_size;
    rep.max_free_size = std::max(rep.max_free_size, r.cover_size);
    any_free = true;
    for (auto b : r.basis_sizes) rep.max_basis_algebra_size = std::max(rep.max_basis_algebra_size, b);
  }
  rep.records = std::move(records);
  return rep;
}

CensusReport run_census(const CensusOptions& options) {
  if (options.stride == 0) throw std::invalid_argument("stride must be positive");
  const auto classes = enumerate_groupoids(options.size, options.arity);
  std::vector<std::size_t> todo_all;
  for (std::size_t i = 0; i < classes.size(); i += options.stride) todo_all.push_back(i);

  std::map<std::size_t, ClassRecord> done;
  if (!options.resume.empty()) {
    std::ifstream in(options.resume);
    std::string line;
    while (std::getline(in, line)) {
      auto r = parse_record(line);
      if (!r || r->index >= classes.size()) continue;
      const auto t = classes[r->index].table(0);
      if (!std::equal(t.begin(), t.end(), r->table.begin(), r->table.end())) continue;
      if (options.full_admalgs && r->status == ClassStatus::ok && r->basis_tables.size() != r->basis_sizes.size())
        continue;
      done.emplace(r->index, std::move(*r));
    }
  }

  std::ofstream out;
  if (!options.out.empty()) {
    out.open(options.out, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + options.out + "'");
  }

  std::vector<ClassRecord> results(todo_all.size());
  const long n = static_cast<long>(todo_all.size());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) ordered num_threads(threads)
  for (long i = 0; i < n; ++i) {
    const std::size_t index = todo_all[i];
    ClassRecord r;
    auto hit = done.find(index);
    if (hit != done.end()) r = hit->second;
    else r = classify(index, classes[index], options.full_admalgs, options.limits, options.class_timeout);
#pragma omp ordered
    {
      if (out) out << format_record(r) << '\n' << std::flush;
      results[i] = std::move(r);
    }
  }
  return summarize(std::move(results), classes.size());
}

void print_report(std::ostream& os, const CensusReport& r) {
  os << "total_classes " << r.total_classes << '\n'
     << "class_count " << r.class_count << '\n'
     << "sc_count " << r.sc_count << '\n'
     << "asc_only_count " << r.asc_only_count << '\n'
     << "neither_count " << r.neither_count << '\n'
     << "skipped_count " << r.skipped_count << '\n'
     << "min_free_size " << r.min_free_size << '\n'
     << "max_free_size " << r.max_free_size << '\n'
     << "max_basis_algebra_size " << r.max_basis_algebra_size << '\n';
}

}  // namespace qadm
