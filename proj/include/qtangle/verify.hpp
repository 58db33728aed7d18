#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtangle/state.hpp"

namespace qtangle {

struct ToleranceConfig {
  double rel = 1e-10;             // identity checks
  double abs_floor = 1e-12;       // residual denominator floor
  double invariance_rel = 1e-9;   // invariance suites (degree-24 quantities accumulate)

  /// Throws unless every field is strictly positive and abs_floor <= rel.
  void validate() const;
};

/// Result of one property check over a deterministic random ensemble.
/// Reproducible: the same (trials, seed, tolerances) give identical outcomes.
struct CheckOutcome {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  int worst_trial = -1;     // trial index that produced max_residual
  double i48_spread = -1.0; // cross-triple check only: informational, never asserted
};

enum class UnitaryGroup { SpecialUnitary, Unitary };

/// |lhs - rhs| / max(|lhs|, |rhs|, abs_floor); stable near zero.
double residual(Complex lhs, Complex rhs, double abs_floor);
double residual(double lhs, double rhs, double abs_floor);

/// (I3)_{(A4)0} of the u_of_y-transformed state against the five-invariant
/// combination, on random states. y runs over the fixed probes
/// {0, 1, i, 1+i} first, then uniform draws from the disk |y| <= 5. The
/// y = 0 probe has residual exactly 0.
CheckOutcome check_transformation_law(int trials, std::uint64_t seed,
                                      const ToleranceConfig& tol = {});

/// Applies an independent group element to each of the four qubits. The
/// special-unitary group leaves i48 and J themselves unchanged; general
/// local unitaries preserve |i48|, |J| and tau4.
CheckOutcome check_lu_invariance(int trials, std::uint64_t seed, UnitaryGroup group,
                                 const ToleranceConfig& tol = {});

/// Scales random states by random c (0.1 <= |c| <= 10) and verifies the
/// degree table: fonts 2; I3, P, T 4; i48 8; J 12; discriminant 24.
CheckOutcome check_homogeneity(int trials, std::uint64_t seed, const ToleranceConfig& tol = {});

/// The discriminant must agree across the four choices of distinguished
/// qubit. The same spread for i48 is recorded in i48_spread but does not
/// affect pass/fail.
CheckOutcome check_cross_triple_delta(int trials, std::uint64_t seed,
                                      const ToleranceConfig& tol = {});

}  // namespace qtangle
