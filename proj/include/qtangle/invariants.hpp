#pragma once

#include <string>
#include <vector>

#include "qtangle/fonts.hpp"
#include "qtangle/state.hpp"

namespace qtangle {

// Polynomial invariants of a four-qubit state built from font determinants,
// with qubit A4 playing the distinguished role. All of them are homogeneous
// in the amplitudes: I3, P, T have degree 4, i48 degree 8, J degree 12 and
// the discriminant degree 24, so none of them require a normalized input.

/// (I3)_{(A4)i4} = (D_{(A4)i4}^{000} - D_{(A4)i4}^{010})^2
///                 - 4 D_{(A3)0(A4)i4}^{00} D_{(A3)1(A4)i4}^{00}.
Complex i3_spectator(const StateVector& state, int i4);

/// T_{A4} = (1/6)(sum of the four D^{00..} fonts)^2 plus the displayed
/// three-way / two-way cross terms; degree 4.
Complex t_invariant(const StateVector& state);

/// P_{(A4)i4}; degree 4.
Complex p_invariant(const StateVector& state, int i4);

/// I_{(4,8)} = 3 T^2 + (I3)_0 (I3)_1 - 4 P_0 P_1.
Complex i48(const StateVector& state);

/// J = det [[ (I3)_1, P_1, T ], [ P_1, T, P_0 ], [ T, P_0, (I3)_0 ]].
Complex j_invariant(const StateVector& state);

/// Delta = i48^3 - 27 J^2.
Complex discriminant(const StateVector& state);

/// Four tangle tau_{(4,8)} = 4 sqrt(12 |i48|); modulus taken so the branch
/// of the complex square root is irrelevant. Requires norm_squared within
/// 1e-9 of 1 (throws otherwise); raw i48 stays available for unnormalized
/// states.
double tau4(const StateVector& state);

/// Right side of the transformation law for (I3)_{(A4)0} under u_of_y(y):
///   (1/(1+|y|^2)^2) [ w^4 (I3)_1 - 4 w^3 P_1 + 6 w^2 T - 4 w P_0 + (I3)_0 ],
/// w = conj(y). Bit-exact equal to i3_spectator(state, 0) at y = 0.
Complex transformed_i3(const StateVector& state, Complex y);

/// Embeds a 3-qubit state as a 4-qubit state with A4 = |0>.
StateVector embed_with_a4_zero(const StateVector& three_qubit_state);

/// Three tangle of a normalized 3-qubit state: 4 |(I3)_{(A4)0}| of the
/// A4 = |0> embedding.
double tau3(const StateVector& three_qubit_state);

/// Coefficients of the quartic  a y^4 - 4 b y^3 + 6 c y^2 - 4 d y + f.
struct QuarticCoefficients {
  Complex a, b, c, d, f;
};

struct QuarticInvariants {
  Complex s;        // a f - 4 b d + 3 c^2
  Complex t_cubic;  // a c f - a d^2 - b^2 f + 2 b c d - c^3
  Complex delta;    // s^3 - 27 t_cubic^2
};

QuarticInvariants quartic_invariants(const QuarticCoefficients& q);

struct LabeledValue {
  std::string label;
  Complex value;
};

/// The five families of pair-A1A2 invariants: the four two-way fonts, the
/// i2-difference of each three-way family, and the two four-way differences
/// D^{0000}-D^{0100}, D^{0001}-D^{0101}. 14 labeled entries.
std::vector<LabeledValue> two_qubit_invariant_list(const StateVector& state);

/// Every invariant of one state for one choice of distinguished qubit.
struct InvariantReport {
  Qubit distinguished = Qubit::A4;
  bool degenerate = false;  // all-zero input; every value is exactly zero
  Complex i3_0, i3_1;       // (I3)_{(A4)0}, (I3)_{(A4)1} after relabeling
  Complex p_0, p_1;
  Complex t;
  Complex i48;
  Complex j;
  Complex delta;
  double tau4 = 0.0;
  std::vector<LabeledValue> two_qubit_invariants;
};

/// Relabels the state so `distinguished` occupies the A4 slot (the other
/// qubits keep their relative order) and computes every field. The state
/// must be normalized (tau4's requirement) or all-zero, in which case the
/// report is flagged degenerate and every value is zero.
InvariantReport full_report(const StateVector& state, Qubit distinguished);

}  // namespace qtangle
