#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qadm/census.hpp"
#include "qadm/errors.hpp"
#include "qadm/homomorphism.hpp"

using namespace qadm;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qadm_" + name + "_" + std::to_string(::getpid()));
}

std::string report_text(const CensusReport& r) {
  std::ostringstream os;
  print_report(os, r);
  return os.str();
}

}  // namespace

TEST(Census, GroupoidClassCounts) {
  EXPECT_EQ(enumerate_groupoids(1, 2).size(), 1u);
  EXPECT_EQ(enumerate_groupoids(2, 2).size(), 10u);
  EXPECT_EQ(enumerate_groupoids(2, 1).size(), 3u);
  auto three = enumerate_groupoids(3, 1);
  EXPECT_EQ(three.size(), 7u);
  for (std::size_t i = 0; i < three.size(); ++i)
    for (std::size_t j = i + 1; j < three.size(); ++j) EXPECT_FALSE(are_isomorphic(three[i], three[j]));
  EXPECT_THROW(enumerate_groupoids(4, 2), ResourceLimitError);
}

TEST(Census, RecordRoundTrip) {
  ClassRecord r;
  r.index = 17;
  r.table = {0, 1, 2, 1, 1, 0, 2, 0, 1};
  r.sc = false;
  r.asc = true;
  r.cover_size = 66;
  r.free_sizes = {66};
  r.basis_sizes = {6, 3};
  r.basis_tables = {{0, 1, 2, 3, 4, 5}, {1, 1, 1}};
  auto line = format_record(r);
  auto back = parse_record(line);
  ASSERT_TRUE(back);
  EXPECT_EQ(format_record(*back), line);
  EXPECT_EQ(back->basis_tables, r.basis_tables);

  ClassRecord s;
  s.index = 3;
  s.table = {0, 0, 0, 0};
  s.status = ClassStatus::skipped;
  s.reason = "free algebra coordinates";
  auto skipped = parse_record(format_record(s));
  ASSERT_TRUE(skipped);
  EXPECT_EQ(skipped->status, ClassStatus::skipped);
  EXPECT_EQ(format_record(*skipped), format_record(s));

  EXPECT_FALSE(parse_record("# comment"));
  EXPECT_FALSE(parse_record(line.substr(0, line.size() / 2)));
}

TEST(Census, TwoElementGroupoids) {
  CensusOptions o;
  o.size = 2;
  auto r = run_census(o);
  EXPECT_EQ(r.total_classes, 10u);
  EXPECT_EQ(r.class_count, 10u);
  EXPECT_EQ(r.sc_count + r.asc_only_count + r.neither_count + r.skipped_count, 10u);
  EXPECT_EQ(r.skipped_count, 0u);
  EXPECT_GE(r.min_free_size, 2u);
}

TEST(Census, StrideAndResumeAreDeterministic) {
  CensusOptions o;
  o.size = 3;
  o.stride = 97;
  auto path = temp_file("census");
  o.out = path.string();
  auto first = run_census(o);
  EXPECT_EQ(first.total_classes, 3330u);
  EXPECT_EQ(first.class_count, (3330u + 96) / 97);

  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  in.close();
  ASSERT_EQ(lines.size(), first.class_count);
  auto truncated = temp_file("census_truncated");
  {
    std::ofstream out(truncated);
    for (std::size_t i = 0; i < lines.size() / 2; ++i) out << lines[i] << '\n';
    out << lines[lines.size() / 2].substr(0, 20);
  }
  CensusOptions again = o;
  again.out = temp_file("census_again").string();
  again.resume = truncated.string();
  again.jobs = 1;
  auto second = run_census(again);
  EXPECT_EQ(report_text(first), report_text(second));
  std::ifstream a(path), b(again.out);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  std::filesystem::remove(path);
  std::filesystem::remove(truncated);
  std::filesystem::remove(again.out);
}

TEST(Census, TimeoutMarksSkipped) {
  auto g = enumerate_groupoids(3, 2);
  Limits tiny;
  tiny.max_free_entries = 10;
  auto r = classify(5, g[5], false, tiny);
  EXPECT_EQ(r.status, ClassStatus::skipped);
  EXPECT_FALSE(r.reason.empty());
}
