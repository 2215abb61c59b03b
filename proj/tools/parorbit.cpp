// Command line front end: classify a single case, reproduce the survey
// table, or run the self-test suites.  Exit codes: 0 success, 2 invalid
// input, 3 non-abelian nilradical, 4 internal consistency failure.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "parorbit/report.hpp"
#include "parorbit/verify.hpp"

namespace {

using namespace parorbit;

Kind parse_kind(const std::string& type) {
  if (type.size() != 1)
    throw ConfigError("type must be a single letter A..E, got '" + type + "'");
  return kind_from_char(static_cast<char>(std::toupper(type[0])));
}

int cmd_classify(const std::string& type, int rank, int node,
                 const std::string& format, const std::string& coords) {
  CaseAnalysis A = analyze_case(parse_kind(type), rank, node);
  CaseReport rep = build_report(A);
  if (format == "json")
    std::cout << report_json_string(rep);
  else
    std::cout << render_text(rep, coords == "epsilon");
  return 0;
}

int cmd_table1(int max_rank, const std::string& format) {
  if (max_rank < 2) throw ConfigError("--max-rank must be at least 2");
  if (max_rank > RootSystem::kMaxRank)
    throw ConfigError("--max-rank must be at most " + std::to_string(RootSystem::kMaxRank));
  json rows = json::array();
  bool ok = true;
  std::string first_bad;
  for (const CaseId& id : survey_grid(max_rank)) {
    CaseAnalysis A = analyze_case(id.kind, id.rank, id.node);
    int got = static_cast<int>(A.orbits.size());
    int want = expected_orbit_count(id);
    if (got != want && first_bad.empty()) {
      ok = false;
      first_bad = case_name(id) + ": computed " + std::to_string(got) +
                  " orbits, formula gives " + std::to_string(want);
    }
    if (format == "json") {
      rows.push_back({{"case", case_name(id)},
                      {"levi", A.P.levi_label},
                      {"dim_v", A.dim_v()},
                      {"orbits", got},
                      {"formula", want},
                      {"match", got == want}});
    } else {
      char line[160];
      std::snprintf(line, sizeof(line), "%-11s %-18s %5d %8d %9d  %s\n",
                    case_name(id).c_str(), A.P.levi_label.c_str(), A.dim_v(), got,
                    want, got == want ? "ok" : "MISMATCH");
      std::cout << line;
    }
  }
  if (format == "json") {
    json out = {{"schema", "parorbit/table1"},
                {"schema_version", 1},
                {"max_rank", max_rank},
                {"rows", rows},
                {"all_match", ok}};
    std::cout << out.dump(2) << "\n";
  }
  if (!ok) throw ConsistencyError("survey table mismatch at " + first_bad);
  return 0;
}

int cmd_selftest(int max_rank, const std::string& format) {
  if (max_rank < 2) throw ConfigError("--max-rank must be at least 2");
  if (max_rank > RootSystem::kMaxRank)
    throw ConfigError("--max-rank must be at most " + std::to_string(RootSystem::kMaxRank));
  auto results = run_selftest(max_rank);
  bool all = true;
  if (format == "json") {
    json suites = json::array();
    for (const auto& s : results) {
      suites.push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
      all = all && s.pass;
    }
    json out = {{"schema", "parorbit/selftest"},
                {"schema_version", 1},
                {"suites", suites},
                {"all_pass", all}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : results) {
      std::cout << (s.pass ? "pass" : "FAIL") << "  " << s.name << ": " << s.detail
                << "\n";
      all = all && s.pass;
    }
  }
  if (!all) throw ConsistencyError("self-test suite failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit, Arthur pair, and packet classification for maximal "
               "parabolic subalgebras with abelian nilradical"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string coords = "simple";
  std::string type;
  int rank = 0, node = 0, max_rank = 8;

  auto* classify = app.add_subcommand("classify", "full report for one case");
  classify->add_option("type", type, "root system type: A, B, C, D, or E")
      ->required();
  classify->add_option("rank", rank, "rank of the root system")->required();
  classify->add_option("node", node, "marked node, 1-based")->required();
  classify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  classify->add_option("--coords", coords, "root display coordinates")
      ->check(CLI::IsMember({"simple", "epsilon"}));

  auto* table1 = app.add_subcommand("table1", "survey of all cases with the "
                                              "expected orbit counts");
  table1->add_option("--max-rank", max_rank, "largest rank to include");
  table1->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}));

  auto* selftest = app.add_subcommand("selftest", "run the verification suites");
  selftest->add_option("--max-rank", max_rank, "largest rank to include");
  selftest->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(type, rank, node, format, coords);
    if (table1->parsed()) return cmd_table1(max_rank, format);
    return cmd_selftest(max_rank, format);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonAbelianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 4;
  }
}
