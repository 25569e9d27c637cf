// numset: command-line front end for the numerical-set toolkit.
//
// Subcommands: analyze, complement, sequence, render, verify, density,
// enumerate.  Set arguments use the same text forms parse_set accepts,
// element notation ("0,2,4,7,8,10,12->") or gap notation ("gaps:1,3,5,6,9").
//
// Exit codes: 0 success (and `verify` with no counterexamples), 1 a verify
// sweep found counterexamples, 2 usage, parse, domain, or budget errors.
// NUMSET_THREADS overrides any --threads value.

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "numset/analysis.hpp"
#include "numset/enumerate.hpp"
#include "numset/json_io.hpp"
#include "numset/numerical_set.hpp"
#include "numset/render.hpp"
#include "numset/sweeps.hpp"
#include "numset/young.hpp"

namespace {

using numset::NumericalSet;

std::string join(const std::vector<int>& v, const char* if_empty) {
  if (v.empty()) return if_empty;
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// positional set texts, or one per non-blank non-# line of --file
std::vector<NumericalSet> gather_inputs(const std::vector<std::string>& args,
                                        const std::string& file) {
  std::vector<std::string> texts = args;
  if (!file.empty()) {
    if (!args.empty())
      throw std::invalid_argument("give sets either as arguments or via --file");
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos || line[a] == '#') continue;
      size_t b = line.find_last_not_of(" \t\r");
      texts.push_back(line.substr(a, b - a + 1));
    }
  }
  if (texts.empty()) throw std::invalid_argument("no input sets given");
  std::vector<NumericalSet> sets;
  sets.reserve(texts.size());
  for (const auto& t : texts) sets.push_back(numset::parse_set(t));
  return sets;
}

void print_analysis_text(const NumericalSet& s) {
  auto sc = numset::scalars(s);
  bool closed = numset::is_semigroup(s);
  NumericalSet assoc = numset::associated_semigroup(s);
  numset::AtomProfile profile = numset::atom_profile(s);
  numset::YoungDiagram d = numset::diagram_of(s);
  std::cout << "set: " << numset::format_set(s) << '\n'
            << "gaps: " << join(s.gaps(), "(none)") << '\n'
            << "frobenius: " << sc.frobenius << '\n'
            << "genus: " << sc.genus << '\n'
            << "multiplicity: " << sc.multiplicity << '\n'
            << "base: " << (sc.base ? std::to_string(*sc.base) : "(undefined)")
            << '\n'
            << "semigroup: " << (closed ? "yes" : "no") << '\n'
            << "associated: " << numset::format_set(assoc) << '\n';
  if (closed) std::cout << "atoms: " << join(numset::atoms(s), "(none)") << '\n';
  std::cout << "profile: " << numset::atom_shape_name(profile.shape) << '\n'
            << "small_elements: " << profile.small_element_count << '\n'
            << "small_atoms: " << profile.small_atom_count << '\n'
            << "rows: " << join(d.rows(), "(empty)") << '\n'
            << "c1: " << numset::c1(d) << '\n';
  if (s.is_nat()) {
    std::cout << "complement: (undefined)\n";
    return;
  }
  auto report = numset::complement_report(s);
  std::cout << "complement: " << numset::format_set(report.comp) << '\n'
            << "delta_genus: " << report.delta_genus << '\n'
            << "base_bound_tight: " << (report.base_bound_tight ? "yes" : "no")
            << '\n';
}

int cmd_analyze(const std::vector<std::string>& args, const std::string& file,
                const std::string& format) {
  auto sets = gather_inputs(args, file);
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : sets) out.push_back(numset::json_io::analyze_json(s));
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (size_t i = 0; i < sets.size(); ++i) {
    if (i) std::cout << '\n';
    print_analysis_text(sets[i]);
  }
  return 0;
}

int cmd_complement(const std::vector<std::string>& args,
                   const std::string& file, const std::string& format) {
  auto sets = gather_inputs(args, file);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : sets) {
    auto report = numset::complement_report(s);  // throws for N
    if (format == "json")
      out.push_back(numset::json_io::report_json(report));
    else
      std::cout << numset::format_set(report.comp) << '\n';
  }
  if (format == "json") std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_sequence(const std::vector<std::string>& args, const std::string& file,
                 const std::string& format) {
  auto sets = gather_inputs(args, file);
  nlohmann::json out = nlohmann::json::array();
  for (size_t i = 0; i < sets.size(); ++i) {
    auto seq = numset::complement_sequence(sets[i]);
    if (format == "json") {
      nlohmann::json terms = nlohmann::json::array();
      nlohmann::json c1s = nlohmann::json::array();
      for (const auto& t : seq.terms) {
        terms.push_back(numset::format_set(t));
        c1s.push_back(numset::c1(numset::diagram_of(t)));
      }
      out.push_back({{"terms", terms}, {"c1", c1s}, {"length", seq.length}});
      continue;
    }
    if (i) std::cout << '\n';
    for (const auto& t : seq.terms)
      std::cout << numset::format_set(t) << "  c1="
                << numset::c1(numset::diagram_of(t)) << '\n';
    std::cout << "length: " << seq.length << '\n';
  }
  if (format == "json") std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_render(const std::string& text, const std::string& format, bool hooks,
               bool overlay) {
  NumericalSet s = numset::parse_set(text);
  numset::YoungDiagram d = numset::diagram_of(s);
  numset::RenderOptions opt;
  opt.hooks = hooks;
  opt.overlay = overlay;
  if (format == "svg")
    std::cout << numset::render_svg(d, opt);
  else
    std::cout << numset::render_ascii(d, opt);
  return 0;
}

int cmd_verify(const std::string& token, int max_f, int threads,
               bool over_budget, const std::string& format) {
  auto st = numset::sweeps::statement_from_name(token);
  auto report = numset::sweeps::run_statement(st, max_f, threads, over_budget);
  if (format == "json") {
    std::cout << numset::json_io::verify_json(report).dump(2) << '\n';
  } else {
    std::cout << "statement: " << report.statement << '\n'
              << "domain_bound: " << report.domain_bound << '\n'
              << "instances_checked: " << report.instances_checked << '\n'
              << "counterexamples: " << report.counterexamples.size() << '\n';
    for (const auto& c : report.counterexamples) std::cout << "  " << c << '\n';
    std::fprintf(stderr, "wall_ms: %.1f\n", report.wall_ms);
  }
  return report.counterexamples.empty() ? 0 : 1;
}

int cmd_density(int f_min, int f_max, int l_max, int threads,
                bool over_budget) {
  auto table =
      numset::enumerate::density_table(f_min, f_max, l_max, threads, over_budget);
  std::cout << numset::enumerate::density_csv(table);
  if (table.rows.size() >= 2)
    std::fprintf(stderr, "largest gamma-ratio step over final rows: %.6f\n",
                 numset::enumerate::gamma_stability(table));
  return 0;
}

int cmd_enumerate(int frobenius, int genus, bool closed, bool count,
                  bool census, int threads, bool over_budget,
                  const std::string& format) {
  if ((frobenius < 0) == (genus < 0))
    throw std::invalid_argument("give exactly one of --frobenius or --genus");
  if (genus >= 0 && !closed)
    throw std::invalid_argument(
        "--genus enumerates semigroups; add --closed to confirm");
  if (census) {
    if (frobenius < 0 || closed)
      throw std::invalid_argument("--census needs --frobenius without --closed");
    if (frobenius > numset::enumerate::kBudgetFrobenius && !over_budget)
      throw numset::enumerate::BudgetError(
          "census beyond the default budget; pass --budget-override");
    auto r = numset::enumerate::shape_census(frobenius, threads);
    if (format == "json") {
      std::cout << numset::json_io::census_json(r).dump(2) << '\n';
      return 0;
    }
    std::cout << "frobenius: " << r.frobenius << '\n'
              << "total_sets: " << r.total_sets << '\n'
              << "no_small: " << r.no_small << '\n';
    for (auto [l, v] : r.one_element_by_l)
      std::cout << "one_element[l=" << l << "]: " << v << '\n';
    for (auto [m, v] : r.one_atom_by_m)
      std::cout << "one_atom[m=" << m << "]: " << v << '\n';
    std::cout << "other: " << r.other << '\n';
    return 0;
  }

  std::int64_t n = 0;
  auto emit = [&](const NumericalSet& s) {
    if (count)
      ++n;
    else
      std::cout << numset::format_set(s) << '\n';
  };
  if (frobenius >= 0) {
    if (closed) {
      numset::enumerate::for_each_semigroup_frobenius(frobenius, emit);
    } else {
      if (frobenius > numset::enumerate::kBudgetFrobenius && !over_budget)
        throw numset::enumerate::BudgetError(
            "listing beyond the default budget; pass --budget-override");
      numset::enumerate::for_each_numerical_set(frobenius, emit);
    }
  } else {
    numset::enumerate::for_each_semigroup_genus(genus, emit);
  }
  if (count) std::cout << n << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical-set toolkit: complements, diagrams, sweeps"};
  app.require_subcommand(1);

  std::vector<std::string> set_args;
  std::string file, format_tj = "text", format_ts = "text";
  int threads = 0;  // 0 = pick automatically
  bool over_budget = false, hooks = false, overlay = false;

  auto* analyze = app.add_subcommand("analyze", "full report on each set");
  analyze->add_option("sets", set_args, "set texts");
  analyze->add_option("--file", file, "read set texts from a file");
  analyze->add_option("--format", format_tj, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* comp = app.add_subcommand("complement", "complement of each set");
  comp->add_option("sets", set_args, "set texts");
  comp->add_option("--file", file, "read set texts from a file");
  comp->add_option("--format", format_tj, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* seq = app.add_subcommand("sequence",
                                 "iterate the complement down to 0->");
  seq->add_option("sets", set_args, "set texts");
  seq->add_option("--file", file, "read set texts from a file");
  seq->add_option("--format", format_tj, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string render_set;
  auto* render = app.add_subcommand("render", "draw the Young diagram");
  render->add_option("set", render_set, "set text")->required();
  render->add_option("--format", format_ts, "text or svg")
      ->check(CLI::IsMember({"text", "svg"}));
  render->add_flag("--hooks", hooks, "label cells with hook lengths");
  render->add_flag("--complement-overlay", overlay,
                   "highlight the rotated complement region");

  std::string statement;
  int max_f = 0;
  auto* verify = app.add_subcommand("verify", "sweep a statement exhaustively");
  verify->add_option("--statement", statement,
                     "one of: thm3 thm4 cor42 prop23 prop24 prop51 cor52 "
                     "prop53 prop55 cor56 prop57 hookgap")
      ->required();
  verify->add_option("--max-f", max_f, "largest Frobenius number to sweep")
      ->required();
  verify->add_option("--threads", threads, "worker threads (0 = auto)");
  verify->add_flag("--budget-override", over_budget,
                   "allow sweeps past the 2^25-set budget");
  verify->add_option("--format", format_tj, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int f_min = 1, f_max = 0, l_max = 3;
  auto* density = app.add_subcommand(
      "density", "CSV of census ratios per Frobenius number");
  density->add_option("--f-min", f_min, "first Frobenius number");
  density->add_option("--f-max", f_max, "last Frobenius number")->required();
  density->add_option("--l-max", l_max, "largest l column");
  density->add_option("--threads", threads, "worker threads (0 = auto)");
  density->add_flag("--budget-override", over_budget,
                    "allow sweeps past the 2^25-set budget");

  int en_f = -1, en_g = -1;
  bool closed = false, count_only = false, census = false;
  auto* enumerate = app.add_subcommand("enumerate", "list sets or semigroups");
  enumerate->add_option("--frobenius", en_f, "fix the Frobenius number");
  enumerate->add_option("--genus", en_g, "fix the genus (semigroups only)");
  enumerate->add_flag("--closed", closed, "only semigroups");
  enumerate->add_flag("--count", count_only, "print the count instead");
  enumerate->add_flag("--census", census, "associated-semigroup shape census");
  enumerate->add_option("--threads", threads, "worker threads (0 = auto)");
  enumerate->add_flag("--budget-override", over_budget,
                      "allow sweeps past the 2^25-set budget");
  enumerate->add_option("--format", format_tj, "text or json (census only)")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(set_args, file, format_tj);
    if (*comp) return cmd_complement(set_args, file, format_tj);
    if (*seq) return cmd_sequence(set_args, file, format_tj);
    if (*render) return cmd_render(render_set, format_ts, hooks, overlay);
    if (*verify)
      return cmd_verify(statement, max_f, threads, over_budget, format_tj);
    if (*density) return cmd_density(f_min, f_max, l_max, threads, over_budget);
    if (*enumerate)
      return cmd_enumerate(en_f, en_g, closed, count_only, census, threads,
                           over_budget, format_tj);
  } catch (const numset::enumerate::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
