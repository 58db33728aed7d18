// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds. Criteria 1-6 exercise the library directly; criterion 7 drives the
// CLI binary, whose path arrives as argv[1].

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "qtangle/invariants.hpp"
#include "qtangle/state.hpp"
#include "qtangle/verify.hpp"

using namespace qtangle;

namespace {

int failures = 0;

void report(int index, const std::string& detail, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", index, detail.c_str());
  if (!ok) ++failures;
}

void guarded(int index, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(index, std::string("unexpected exception: ") + e.what(), false);
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int rc = pclose(pipe);
  if (WIFEXITED(rc)) result.status = WEXITSTATUS(rc);
  return result;
}

StateVector w3_state() {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<Complex> a(8, 0.0);
  a[0b001] = s;
  a[0b010] = s;
  a[0b100] = s;
  return StateVector(3, std::move(a));
}

void criterion_fixtures() {
  double worst = 0.0;
  const auto track = [&worst](double err) { worst = std::max(worst, err); };

  track(std::abs(i48(builtin_state("ghz4")) - Complex(1.0 / 192.0)));
  track(std::abs(j_invariant(builtin_state("ghz4")) - Complex(-1.0 / 13824.0)));
  track(std::abs(discriminant(builtin_state("ghz4"))));
  track(std::abs(tau4(builtin_state("ghz4")) - 1.0));
  track(std::abs(tau4(builtin_state("w4"))));
  track(std::abs(tau4(builtin_state("cluster4")) - 1.0));
  track(std::abs(tau4(builtin_state("product4"))));
  track(std::abs(tau3(builtin_state("ghz3")) - 1.0));
  track(std::abs(tau3(w3_state())));

  report(1, "fixture values (max abs error " + fmt(worst) + ")", worst <= 1e-12);
}

void criterion_transformation() {
  const CheckOutcome full = check_transformation_law(200, 1);
  const CheckOutcome zero_probe = check_transformation_law(1, 1);
  const bool exact_at_zero = zero_probe.max_residual == 0.0;
  report(2,
         "transformation law (200 trials, max residual " + fmt(full.max_residual) +
             ", y=0 residual exactly 0: " + (exact_at_zero ? "yes" : "no") + ")",
         full.pass && exact_at_zero);
}

void criterion_lu_invariance() {
  const CheckOutcome su = check_lu_invariance(200, 1, UnitaryGroup::SpecialUnitary);
  const CheckOutcome u2 = check_lu_invariance(200, 1, UnitaryGroup::Unitary);
  report(3,
         "local unitary invariance (200 trials each, max residuals " + fmt(su.max_residual) +
             " det-1 / " + fmt(u2.max_residual) + " general)",
         su.pass && u2.pass);
}

void criterion_homogeneity() {
  const CheckOutcome outcome = check_homogeneity(100, 1);
  report(4,
         "homogeneity degrees 2/4/4/4/8/12/24 (100 trials, max residual " +
             fmt(outcome.max_residual) + ")",
         outcome.pass);
}

void criterion_quartic_identities() {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const StateVector s = random_state(4, derive_seed(500, k));
    const QuarticCoefficients q{i3_spectator(s, 1), p_invariant(s, 1), t_invariant(s),
                                p_invariant(s, 0), i3_spectator(s, 0)};
    const QuarticInvariants inv = quartic_invariants(q);
    worst = std::max(worst, std::abs(inv.s - i48(s)));
    worst = std::max(worst, std::abs(inv.t_cubic - j_invariant(s)));
    worst = std::max(worst, std::abs(inv.delta - discriminant(s)));
  }
  report(5, "quartic identities on 100 random states (max abs error " + fmt(worst) + ")",
         worst <= 1e-12);
}

void criterion_cross_triple() {
  const CheckOutcome outcome = check_cross_triple_delta(100, 1);
  report(6,
         "cross-triple discriminant agreement (100 states, max residual " +
             fmt(outcome.max_residual) + "; informational i48 spread " +
             fmt(outcome.i48_spread) + ")",
         outcome.pass);
}

void criterion_cli(const std::string& cli) {
  if (cli.empty()) {
    report(7, "CLI contract (no CLI path supplied)", false);
    return;
  }
  const std::string quoted = "'" + cli + "'";
  const std::string verify_cmd = quoted + " verify --suite all --trials 200 --seed 1 2>&1";
  const RunResult first = run_command(verify_cmd);
  const RunResult second = run_command(verify_cmd);

  const std::filesystem::path bad_path =
      std::filesystem::temp_directory_path() / "qtangle_acceptance_bad_state.json";
  {
    std::ofstream out(bad_path);
    out << "{\"version\": 1, \"n_qubits\": 4, \"amplitudes\": [";
    for (int i = 0; i < 15; ++i) out << (i ? ", " : "") << "[0, 0]";
    out << "]}\n";
  }
  const RunResult bad =
      run_command(quoted + " compute --file '" + bad_path.string() + "' 2>&1");

  const bool reproducible =
      first.status == 0 && second.status == 0 && !first.output.empty() &&
      first.output == second.output;
  const bool diagnostic =
      bad.status == 2 && bad.output.find("expected 16 amplitudes") != std::string::npos;
  report(7,
         std::string("CLI contract (verify exit ") + std::to_string(first.status) +
             ", byte-reproducible: " + (reproducible ? "yes" : "no") +
             ", malformed file exit " + std::to_string(bad.status) + " with diagnostic: " +
             (diagnostic ? "yes" : "no") + ")",
         reproducible && diagnostic);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  guarded(1, criterion_fixtures);
  guarded(2, criterion_transformation);
  guarded(3, criterion_lu_invariance);
  guarded(4, criterion_homogeneity);
  guarded(5, criterion_quartic_identities);
  guarded(6, criterion_cross_triple);
  guarded(7, [&cli] { criterion_cli(cli); });

  return failures == 0 ? 0 : 1;
}
