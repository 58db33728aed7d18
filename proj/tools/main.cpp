// qtangle CLI: invariant reports, the verification suites and the builtin
// state catalog. Exit codes: 0 success / all checks pass, 1 verification
// failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtangle/invariants.hpp"
#include "qtangle/state.hpp"
#include "qtangle/statefile.hpp"
#include "qtangle/verify.hpp"

namespace {

using namespace qtangle;
using nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct CatalogEntry {
  const char* name;
  int n_qubits;
  const char* definition;
  const char* tangle;   // which tangle the value refers to
  double value;
  const char* provenance;
};

constexpr CatalogEntry kCatalog[] = {
    {"ghz4", 4, "(|0000> + |1111>)/sqrt(2)", "tau4", 1.0, "analytic"},
    {"w4", 4, "(|0001> + |0010> + |0100> + |1000>)/2", "tau4", 0.0, "analytic"},
    {"cluster4", 4, "(|0000> + |0011> + |1100> - |1111>)/2", "tau4", 1.0, "analytic"},
    {"product4", 4, "|0000>", "tau4", 0.0, "analytic"},
    {"ghz3", 3, "(|000> + |111>)/sqrt(2)", "tau3", 1.0, "analytic"},
};

int run_catalog(const std::string& format) {
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const CatalogEntry& e : kCatalog) {
      ordered_json row;
      row["name"] = e.name;
      row["n_qubits"] = e.n_qubits;
      row["definition"] = e.definition;
      row["tangle"] = e.tangle;
      row["value"] = e.value;
      row["provenance"] = e.provenance;
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << '\n';
    return 0;
  }
  std::printf("%-10s %-7s %-42s %s\n", "name", "qubits", "definition", "tangle");
  for (const CatalogEntry& e : kCatalog)
    std::printf("%-10s %-7d %-42s %s = %s  (%s)\n", e.name, e.n_qubits, e.definition, e.tangle,
                fmt_double(e.value).c_str(), e.provenance);
  return 0;
}

void print_report_text(const InvariantReport& report) {
  std::printf("distinguished %s:\n", to_string(report.distinguished));
  if (report.degenerate)
    std::printf("  degenerate all-zero state: every invariant is 0\n");
  std::printf("  (I3)_0  = %s\n", format_complex(report.i3_0).c_str());
  std::printf("  (I3)_1  = %s\n", format_complex(report.i3_1).c_str());
  std::printf("  P_0     = %s\n", format_complex(report.p_0).c_str());
  std::printf("  P_1     = %s\n", format_complex(report.p_1).c_str());
  std::printf("  T       = %s\n", format_complex(report.t).c_str());
  std::printf("  I_(4,8) = %s\n", format_complex(report.i48).c_str());
  std::printf("  J       = %s\n", format_complex(report.j).c_str());
  std::printf("  Delta   = %s\n", format_complex(report.delta).c_str());
  std::printf("  tau4    = %s\n", fmt_double(report.tau4).c_str());
  std::printf("  pair A1A2 invariants:\n");
  for (const LabeledValue& lv : report.two_qubit_invariants)
    std::printf("    %-37s = %s\n", lv.label.c_str(), format_complex(lv.value).c_str());
}

int run_compute(const std::string& state_name, const std::string& file_path,
                const std::string& distinguished, const std::string& format) {
  std::string label;
  StateVector state = [&] {
    if (!state_name.empty()) {
      label = state_name;
      return builtin_state(state_name);
    }
    StateVector s = read_state_file(file_path, &label);
    if (label.empty()) label = file_path;
    return s;
  }();

  const double input_norm2 = state.norm_squared();
  const bool degenerate = state.degenerate();

  bool embedded = false;
  double tau3_value = 0.0;
  if (state.n_qubits() == 3) {
    embedded = true;
    tau3_value = degenerate ? 0.0 : tau3(state.normalized());
    state = embed_with_a4_zero(state);
  }

  const StateVector working = degenerate ? state : state.normalized();

  std::vector<Qubit> picks;
  if (distinguished == "all")
    picks = {Qubit::A1, Qubit::A2, Qubit::A3, Qubit::A4};
  else
    picks = {qubit_from_string(distinguished)};

  std::vector<InvariantReport> reports;
  reports.reserve(picks.size());
  for (Qubit q : picks) reports.push_back(full_report(working, q));

  // Spread across the four triples, only meaningful for --distinguished all.
  const ToleranceConfig tol;
  double delta_spread = 0.0, i48_spread = 0.0;
  if (reports.size() == 4) {
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) {
        delta_spread = std::max(delta_spread,
                                residual(reports[a].delta, reports[b].delta, tol.abs_floor));
        i48_spread =
            std::max(i48_spread, residual(reports[a].i48, reports[b].i48, tol.abs_floor));
      }
  }

  if (format == "json") {
    ordered_json doc;
    doc["label"] = label;
    doc["n_qubits"] = embedded ? 3 : 4;
    doc["input_norm_squared"] = input_norm2;
    doc["degenerate"] = degenerate;
    doc["embedded_from_3_qubits"] = embedded;
    doc["tau3"] = embedded ? ordered_json(tau3_value) : ordered_json(nullptr);
    ordered_json arr = ordered_json::array();
    for (const InvariantReport& r : reports) arr.push_back(report_json(r));
    doc["reports"] = std::move(arr);
    doc["delta_spread"] = reports.size() == 4 ? ordered_json(delta_spread) : ordered_json(nullptr);
    doc["i48_spread"] = reports.size() == 4 ? ordered_json(i48_spread) : ordered_json(nullptr);
    std::cout << doc.dump(2) << '\n';
    return 0;
  }

  std::printf("state %s: %d qubits, input norm^2 = %s\n", label.c_str(), embedded ? 3 : 4,
              fmt_double(input_norm2).c_str());
  if (embedded)
    std::printf("embedded as a 4-qubit state with A4 = |0>; tau3 = %s\n",
                fmt_double(tau3_value).c_str());
  for (const InvariantReport& r : reports) print_report_text(r);
  if (reports.size() == 4)
    std::printf("cross-triple spread: Delta = %s, i48 = %s (i48 spread is informational)\n",
                fmt_double(delta_spread).c_str(), fmt_double(i48_spread).c_str());
  return 0;
}

CheckOutcome combined_lu_check(int trials, std::uint64_t seed, const ToleranceConfig& tol) {
  const CheckOutcome su = check_lu_invariance(trials, seed, UnitaryGroup::SpecialUnitary, tol);
  const CheckOutcome u2 = check_lu_invariance(trials, seed, UnitaryGroup::Unitary, tol);
  CheckOutcome merged = su.max_residual >= u2.max_residual ? su : u2;
  merged.name = "lu_invariance";
  merged.pass = su.pass && u2.pass;
  return merged;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, double rel,
               const std::string& format) {
  ToleranceConfig tol;
  tol.rel = rel;
  tol.abs_floor = std::min(tol.abs_floor, rel);  // keep the floor below a tightened tolerance
  tol.validate();

  std::vector<CheckOutcome> outcomes;
  if (suite == "transformation" || suite == "all")
    outcomes.push_back(check_transformation_law(trials, seed, tol));
  if (suite == "lu" || suite == "all") outcomes.push_back(combined_lu_check(trials, seed, tol));
  if (suite == "homogeneity" || suite == "all")
    outcomes.push_back(check_homogeneity(trials, seed, tol));
  if (suite == "cross_triple" || suite == "all")
    outcomes.push_back(check_cross_triple_delta(trials, seed, tol));

  bool all_pass = true;
  for (const CheckOutcome& o : outcomes) {
    all_pass = all_pass && o.pass;
    if (format == "json") {
      std::cout << check_outcome_json(o).dump() << '\n';
      continue;
    }
    std::printf("%s %s trials=%d max_residual=%s seed=%llu", o.pass ? "PASS" : "FAIL",
                o.name.c_str(), o.trials, fmt_double(o.max_residual).c_str(),
                static_cast<unsigned long long>(o.seed));
    if (o.i48_spread >= 0.0) std::printf(" i48_spread=%s", fmt_double(o.i48_spread).c_str());
    if (!o.pass) std::printf(" worst_trial=%d", o.worst_trial);
    std::printf("\n");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial entanglement invariants of four-qubit pure states"};
  app.require_subcommand(1);

  std::string state_name, file_path, distinguished = "A4", format = "text";
  CLI::App* compute = app.add_subcommand("compute", "Invariant report for one state");
  CLI::Option* state_opt =
      compute->add_option("--state", state_name, "Builtin state name (see catalog)");
  CLI::Option* file_opt = compute->add_option("--file", file_path, "Path to a JSON state file");
  state_opt->excludes(file_opt);
  file_opt->excludes(state_opt);
  compute->add_option("--distinguished", distinguished, "Distinguished qubit (default A4)")
      ->check(CLI::IsMember({"A1", "A2", "A3", "A4", "all"}));
  compute->add_option("--format", format, "Output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  std::string suite = "all";
  int trials = 200;
  std::uint64_t seed = 1;
  double rel = 1e-10;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "Suite to run (default all)")
      ->check(CLI::IsMember({"transformation", "lu", "homogeneity", "cross_triple", "all"}));
  verify->add_option("--trials", trials, "Number of random trials (default 200)")
      ->check(CLI::Range(1, 1000000000));
  verify->add_option("--seed", seed, "Master seed (default 1)");
  verify->add_option("--rel", rel, "Relative tolerance for identity checks (default 1e-10)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "Output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* catalog = app.add_subcommand("catalog", "List builtin states and their tangles");
  catalog->add_option("--format", format, "Output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) {
      if (state_name.empty() && file_path.empty())
        throw std::invalid_argument("compute needs --state or --file");
      return run_compute(state_name, file_path, distinguished, format);
    }
    if (*verify) return run_verify(suite, trials, seed, rel, format);
    return run_catalog(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
