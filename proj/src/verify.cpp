#include "qtangle/verify.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qtangle/fonts.hpp"
#include "qtangle/invariants.hpp"

namespace qtangle {

namespace {

// Distinct seed streams per check so suites never share trial states.
constexpr std::uint64_t kTransformationTag = 0x7472616e73666f72ull;
constexpr std::uint64_t kSpecialUnitaryTag = 0x7375283229202020ull;
constexpr std::uint64_t kUnitaryTag = 0x7532202020202020ull;
constexpr std::uint64_t kHomogeneityTag = 0x686f6d6f67656e65ull;
constexpr std::uint64_t kCrossTripleTag = 0x63726f7373747269ull;

void require_trials(int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

struct ResidualTracker {
  double max_residual = 0.0;
  int worst_trial = -1;

  void feed(double r, int trial) {
    if (r > max_residual) {
      max_residual = r;
      worst_trial = trial;
    }
  }
};

Complex pow_int(Complex base, int exponent) {
  Complex out = 1.0;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

void ToleranceConfig::validate() const {
  if (!(rel > 0.0) || !(abs_floor > 0.0) || !(invariance_rel > 0.0))
    throw std::invalid_argument("tolerances must be strictly positive");
  if (abs_floor > rel)
    throw std::invalid_argument("abs_floor must not exceed rel");
}

double residual(Complex lhs, Complex rhs, double abs_floor) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), abs_floor});
  return std::abs(lhs - rhs) / scale;
}

double residual(double lhs, double rhs, double abs_floor) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), abs_floor});
  return std::abs(lhs - rhs) / scale;
}

CheckOutcome check_transformation_law(int trials, std::uint64_t seed, const ToleranceConfig& tol) {
  require_trials(trials);
  tol.validate();

  static const std::array<Complex, 4> kProbes = {Complex{0.0, 0.0}, Complex{1.0, 0.0},
                                                 Complex{0.0, 1.0}, Complex{1.0, 1.0}};
  ResidualTracker tracker;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed ^ kTransformationTag, static_cast<std::uint64_t>(trial)));
    const StateVector state = sample_state(rng, 4);

    const Complex y = trial < static_cast<int>(kProbes.size())
                          ? kProbes[static_cast<std::size_t>(trial)]
                          : rng.uniform_disk(5.0);
    const Complex lhs = i3_spectator(apply_local(state, {u_of_y(y), Qubit::A4}), 0);
    const Complex rhs = transformed_i3(state, y);
    tracker.feed(residual(lhs, rhs, tol.abs_floor), trial);
  }

  return {"transformation_law", trials, tracker.max_residual, tracker.max_residual <= tol.rel,
          seed, tracker.worst_trial, -1.0};
}

CheckOutcome check_lu_invariance(int trials, std::uint64_t seed, UnitaryGroup group,
                                 const ToleranceConfig& tol) {
  require_trials(trials);
  tol.validate();

  const bool special = group == UnitaryGroup::SpecialUnitary;
  const std::uint64_t tag = special ? kSpecialUnitaryTag : kUnitaryTag;

  ResidualTracker tracker;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed ^ tag, static_cast<std::uint64_t>(trial)));
    const StateVector state = sample_state(rng, 4);

    StateVector moved = state;
    for (Qubit q : {Qubit::A1, Qubit::A2, Qubit::A3, Qubit::A4}) {
      const Mat2 u = special ? rng.haar_su2() : rng.haar_u2();
      moved = apply_local(moved, {u, q});
    }

    if (special) {
      tracker.feed(residual(i48(state), i48(moved), tol.abs_floor), trial);
      tracker.feed(residual(j_invariant(state), j_invariant(moved), tol.abs_floor), trial);
    } else {
      tracker.feed(residual(std::abs(i48(state)), std::abs(i48(moved)), tol.abs_floor), trial);
      tracker.feed(
          residual(std::abs(j_invariant(state)), std::abs(j_invariant(moved)), tol.abs_floor),
          trial);
      tracker.feed(residual(tau4(state), tau4(moved), tol.abs_floor), trial);
    }
  }

  return {special ? "lu_invariance_su2" : "lu_invariance_u2", trials, tracker.max_residual,
          tracker.max_residual <= tol.invariance_rel, seed, tracker.worst_trial, -1.0};
}

CheckOutcome check_homogeneity(int trials, std::uint64_t seed, const ToleranceConfig& tol) {
  require_trials(trials);
  tol.validate();

  ResidualTracker tracker;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed ^ kHomogeneityTag, static_cast<std::uint64_t>(trial)));
    const StateVector state = sample_state(rng, 4);

    // |c| log-uniform over [0.1, 10], uniform phase.
    const double log_mod = rng.uniform(std::log(0.1), std::log(10.0));
    const Complex c = std::polar(std::exp(log_mod), rng.uniform(0.0, 2.0 * std::numbers::pi));
    const StateVector scaled = state.scaled(c);

    const Complex c2 = c * c;
    const Complex c4 = c2 * c2;
    auto feed = [&](Complex lhs, Complex rhs) {
      tracker.feed(residual(lhs, rhs, tol.abs_floor), trial);
    };

    for (int i3 = 0; i3 < 2; ++i3)
      for (int i4 = 0; i4 < 2; ++i4)
        feed(two_way_font(scaled, i3, i4), c2 * two_way_font(state, i3, i4));
    for (int hi = 0; hi < 2; ++hi)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int lo = 0; lo < 2; ++lo) {
          feed(three_way_font_spectator_a3(scaled, hi, i2, lo),
               c2 * three_way_font_spectator_a3(state, hi, i2, lo));
          feed(three_way_font_spectator_a4(scaled, hi, i2, lo),
               c2 * three_way_font_spectator_a4(state, hi, i2, lo));
          feed(four_way_font(scaled, hi, i2, lo), c2 * four_way_font(state, hi, i2, lo));
        }
    for (int i4 = 0; i4 < 2; ++i4) {
      feed(i3_spectator(scaled, i4), c4 * i3_spectator(state, i4));
      feed(p_invariant(scaled, i4), c4 * p_invariant(state, i4));
    }
    feed(t_invariant(scaled), c4 * t_invariant(state));
    feed(i48(scaled), c4 * c4 * i48(state));
    feed(j_invariant(scaled), pow_int(c, 12) * j_invariant(state));
    feed(discriminant(scaled), pow_int(c, 24) * discriminant(state));
  }

  return {"homogeneity", trials, tracker.max_residual, tracker.max_residual <= tol.rel, seed,
          tracker.worst_trial, -1.0};
}

CheckOutcome check_cross_triple_delta(int trials, std::uint64_t seed, const ToleranceConfig& tol) {
  require_trials(trials);
  tol.validate();

  ResidualTracker tracker;
  double i48_spread = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed ^ kCrossTripleTag, static_cast<std::uint64_t>(trial)));
    const StateVector state = sample_state(rng, 4);

    std::array<Complex, 4> delta;
    std::array<Complex, 4> i48_by_triple;
    for (int q = 0; q < 4; ++q) {
      const InvariantReport report = full_report(state, static_cast<Qubit>(q));
      delta[static_cast<std::size_t>(q)] = report.delta;
      i48_by_triple[static_cast<std::size_t>(q)] = report.i48;
    }
    for (int lhs = 0; lhs < 4; ++lhs)
      for (int rhs = lhs + 1; rhs < 4; ++rhs) {
        tracker.feed(residual(delta[static_cast<std::size_t>(lhs)],
                              delta[static_cast<std::size_t>(rhs)], tol.abs_floor),
                     trial);
        i48_spread = std::max(i48_spread,
                              residual(i48_by_triple[static_cast<std::size_t>(lhs)],
                                       i48_by_triple[static_cast<std::size_t>(rhs)], tol.abs_floor));
      }
  }

  return {"cross_triple_delta", trials, tracker.max_residual,
          tracker.max_residual <= tol.invariance_rel, seed, tracker.worst_trial, i48_spread};
}

}  // namespace qtangle
