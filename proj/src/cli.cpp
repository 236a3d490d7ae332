#include "qadm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "qadm/admissibility.hpp"
#include "qadm/census.hpp"
#include "qadm/errors.hpp"
#include "qadm/free_algebra.hpp"
#include "qadm/io.hpp"
#include "qadm/kernels.hpp"
#include "qadm/logic.hpp"
#include "qadm/mingen.hpp"
#include "qadm/validity.hpp"

namespace qadm {

namespace {

struct Options {
  std::vector<std::string> files;
  std::uint64_t max_free_size = default_limits().max_free_entries;
  std::uint64_t assignment_budget = default_limits().assignment_budget;
  int jobs = 0;
  bool direct = false;
  bool witnesses = false;
  bool emit = false;
  std::size_t rank = 1;
  std::string clause;
  std::string equations;
  std::string rule;
  std::string designated;
  std::string route = "reduced";
  CensusOptions census;
  double timeout = 0;

  Limits limits() const {
    Limits l;
    l.max_free_entries = max_free_size;
    l.assignment_budget = assignment_budget;
    return l;
  }
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_elements(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<Element> parse_designated(const std::string& text, std::size_t size) {
  std::vector<Element> out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v >= size) throw std::invalid_argument("bad designated value '" + item + "'");
    out.push_back(static_cast<Element>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void print_logic(std::ostream& out, const Logic& logic) {
  out << "# designated " << join_elements(logic.designated_elements()) << '\n';
  out << format_problem(logic.algebra.signature(), std::span(&logic.algebra, 1));
}

int cmd_free(const Options& o, std::ostream& out) {
  auto p = load_problem_files(o.files);
  auto f = free_algebra(p.algebras, o.rank, o.limits());
  out << "size " << f.size() << '\n';
  if (o.witnesses)
    for (Element e = 0; e < f.size(); ++e) out << e << ' ' << f.witness(e).to_string() << '\n';
  if (o.emit) out << format_problem(*p.signature, std::span(&f.base(), 1));
  return 0;
}

int cmd_mingen(const Options& o, std::ostream& out) {
  auto p = load_problem_files(o.files);
  auto gens = min_gen_set(p.algebras);
  if (gens.empty()) {
    out << "empty generating set (trivial quasivariety)\n";
    return 0;
  }
  out << "# " << gens.size() << " algebra(s)\n" << format_problem(*p.signature, gens);
  return 0;
}

int cmd_admalgs(const Options& o, std::ostream& out) {
  auto p = load_problem_files(o.files);
  auto adm = adm_algs(p.algebras, o.limits());
  if (adm.basis.empty()) {
    out << "empty basis (trivial quasivariety)\n";
    return 0;
  }
  out << "# " << adm.basis.size() << " algebra(s)\n";
  for (std::size_t i = 0; i < adm.basis.size(); ++i) {
    const auto& prov = adm.provenance[i];
    out << "# " << adm.basis[i].name() << ": from " << adm.generating[prov.source].name() << " via F("
        << prov.generators << "), sizes";
    for (auto s : prov.chain) out << ' ' << s;
    out << '\n';
  }
  out << format_problem(*p.signature, adm.basis);
  return 0;
}

int cmd_check(const std::string& what, const Options& o, std::ostream& out) {
  auto p = load_problem_files(o.files);
  const auto route = o.direct ? AdmRoute::direct : AdmRoute::basis;
  const auto limits = o.limits();
  bool answer = false;
  if (what == "sc") {
    answer = is_structurally_complete(p.algebras, route, limits);
    out << "structurally complete: " << yes_no(answer) << '\n';
  } else if (what == "asc") {
    answer = is_almost_structurally_complete(p.algebras, route, limits);
    out << "almost structurally complete: " << yes_no(answer) << '\n';
  } else if (what == "adm") {
    if (o.clause.empty()) throw std::invalid_argument("check adm needs --clause");
    auto clause = parse_clause(o.clause, *p.signature);
    answer = check_admissible(p.algebras, clause, route, limits);
    out << "admissible: " << yes_no(answer) << '\n';
  } else {
    auto eqs = parse_equations(o.equations, *p.signature);
    answer = check_unifiable(p.algebras, eqs, limits);
    out << "unifiable: " << yes_no(answer) << '\n';
  }
  return answer ? 0 : 1;
}

int cmd_logic(const std::string& what, const Options& o, std::ostream& out) {
  auto p = load_problem_files(o.files);
  if (p.algebras.size() != 1) throw std::invalid_argument("logic commands take exactly one algebra");
  const auto& a = p.algebras[0];
  Logic logic = make_logic(a, parse_designated(o.designated, a.size()));
  const auto limits = o.limits();
  if (what == "star") {
    Logic star = logic_star(logic, limits);
    out << "size " << star.algebra.size() << '\n';
    if (o.emit) print_logic(out, star);
    return 0;
  }
  if (what == "reduce") {
    auto r = reduced_logic(logic, limits);
    out << "size " << r.logic.algebra.size() << '\n'
        << "designated count " << r.logic.designated_elements().size() << '\n'
        << "inside free algebra F(" << r.rank << ") of size " << r.free_size << '\n';
    print_logic(out, r.logic);
    return 0;
  }
  if (o.rule.empty()) throw std::invalid_argument("logic adm needs --rule");
  if (o.route != "reduced" && o.route != "star") throw std::invalid_argument("--route must be reduced or star");
  auto rule = parse_rule(o.rule, a.signature());
  bool answer = rule_admissible(logic, rule, o.route == "star" ? LogicRoute::star : LogicRoute::reduced, limits);
  out << "admissible: " << yes_no(answer) << '\n';
  return answer ? 0 : 1;
}

int cmd_census(Options o, std::ostream& out) {
  o.census.limits = o.limits();
  o.census.jobs = o.jobs;
  if (o.timeout > 0) o.census.class_timeout = std::chrono::duration<double>(o.timeout);
  print_report(out, run_census(o.census));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissibility and structural completeness for finite algebras", "qadm"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-free-size", o.max_free_size, "Cap on free-algebra coordinate entries")->capture_default_str();
  app.add_option("--assignment-budget", o.assignment_budget, "Cap on assignments per validity check")
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads (0 = default)");

  auto add_files = [&](CLI::App* sub) {
    sub->add_option("files", o.files, "Algebra files")->required()->check(CLI::ExistingFile);
  };

  auto* free_cmd = app.add_subcommand("free", "Build a free algebra");
  add_files(free_cmd);
  free_cmd->add_option("-n,--generators", o.rank, "Number of free generators")->required();
  free_cmd->add_flag("--witnesses", o.witnesses, "Print a term for every element");
  free_cmd->add_flag("--emit", o.emit, "Print the free algebra in the input format");

  auto* mingen_cmd = app.add_subcommand("mingen", "Minimal generating set of the quasivariety");
  add_files(mingen_cmd);

  auto* adm_cmd = app.add_subcommand("admalgs", "Algebras for checking admissibility");
  add_files(adm_cmd);

  auto* check_cmd = app.add_subcommand("check", "Boolean checks (exit 0 = yes, 1 = no)");
  check_cmd->require_subcommand(1);
  std::string check_what;
  for (const char* name : {"sc", "asc", "adm", "unif"}) {
    auto* sub = check_cmd->add_subcommand(name);
    add_files(sub);
    sub->add_flag("--direct", o.direct, "Use F_K(n) instead of the admissibility basis");
    if (std::string(name) == "adm") sub->add_option("--clause", o.clause, "Clause 'e1, e2 => f'")->required();
    if (std::string(name) == "unif") sub->add_option("--equations", o.equations, "Equations 'e1, e2'")->required();
    sub->callback([&, name] { check_what = name; });
  }

  auto* logic_cmd = app.add_subcommand("logic", "Finite-valued logics (algebra plus designated values)");
  logic_cmd->require_subcommand(1);
  std::string logic_what;
  for (const char* name : {"star", "reduce", "adm"}) {
    auto* sub = logic_cmd->add_subcommand(name);
    add_files(sub);
    sub->add_option("--designated", o.designated, "Comma-separated designated values")->required();
    if (std::string(name) != "adm") sub->add_flag("--emit", o.emit, "Print the logic in the input format");
    if (std::string(name) == "adm") {
      sub->add_option("--rule", o.rule, "Rule 'g1, g2 / f'")->required();
      sub->add_option("--route", o.route, "reduced or star")->capture_default_str();
    }
    sub->callback([&, name] { logic_what = name; });
  }

  auto* census_cmd = app.add_subcommand("census", "Classify all small single-operation algebras");
  census_cmd->add_option("--size", o.census.size)->capture_default_str();
  census_cmd->add_option("--arity", o.census.arity)->capture_default_str();
  census_cmd->add_flag("--full-admalgs", o.census.full_admalgs, "Record the basis tables");
  census_cmd->add_option("--out", o.census.out, "Record file");
  census_cmd->add_option("--resume", o.census.resume, "Reuse records from an earlier file");
  census_cmd->add_option("--stride", o.census.stride, "Process every N-th class")->capture_default_str();
  census_cmd->add_option("--timeout", o.timeout, "Per-class time limit in seconds");
  census_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    kernels::set_thread_count(o.jobs);
    if (free_cmd->parsed()) return cmd_free(o, out);
    if (mingen_cmd->parsed()) return cmd_mingen(o, out);
    if (adm_cmd->parsed()) return cmd_admalgs(o, out);
    if (check_cmd->parsed()) return cmd_check(check_what, o, out);
    if (logic_cmd->parsed()) return cmd_logic(logic_what, o, out);
    if (census_cmd->parsed()) return cmd_census(o, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qadm
