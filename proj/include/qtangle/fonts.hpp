#pragma once

#include <string>

#include "qtangle/state.hpp"

namespace qtangle {

// Negativity fonts: 2x2 determinants of selected amplitudes of a four-qubit
// state in the canonical labeling A1A2A3A4. A font is classified by which
// qubits are spectators (their basis index is held fixed and written as a
// subscript) and which indices flip between the determinant's columns.
//
// Superscript convention: the superscript lists the A1..A4 index values of
// the non-spectator qubits in label order, with A1 fixed to 0; the second
// column of the determinant flips every non-spectator index except A1's row
// index. "i ^ 1" below is that mod-2 flip. With this convention the
// transformed (I3)_{(A4)0} is exactly the degree-four combination computed
// by transformed_i3() (see invariants.hpp), which pins the convention down.

/// D_{(A3)i3 (A4)i4}^{00} = a_{00 i3 i4} a_{11 i3 i4} - a_{01 i3 i4} a_{10 i3 i4}.
Complex two_way_font(const StateVector& state, int i3, int i4);

/// D_{(A3)i3}^{0 i2 i4} = a_{0 i2 i3 i4} a_{1 i2^1 i3 i4^1} - a_{0 i2^1 i3 i4^1} a_{1 i2 i3 i4}.
Complex three_way_font_spectator_a3(const StateVector& state, int i3, int i2, int i4);

/// D_{(A4)i4}^{0 i2 i3} = a_{0 i2 i3 i4} a_{1 i2^1 i3^1 i4} - a_{0 i2^1 i3^1 i4} a_{1 i2 i3 i4}.
Complex three_way_font_spectator_a4(const StateVector& state, int i4, int i2, int i3);

/// D^{0 i2 i3 i4} = a_{0 i2 i3 i4} a_{1 i2^1 i3^1 i4^1} - a_{0 i2^1 i3^1 i4^1} a_{1 i2 i3 i4}.
Complex four_way_font(const StateVector& state, int i2, int i3, int i4);

/// Identifies one font: its family plus the spectator/superscript bits.
struct FontIndex {
  enum class Kind { TwoWay, ThreeWaySpectatorA3, ThreeWaySpectatorA4, FourWay };

  static FontIndex two_way(int i3, int i4);
  static FontIndex three_way_a3(int i3, int i2, int i4);
  static FontIndex three_way_a4(int i4, int i2, int i3);
  static FontIndex four_way(int i2, int i3, int i4);

  Kind kind;
  int spectator_a3 = -1;  // TwoWay, ThreeWaySpectatorA3
  int spectator_a4 = -1;  // TwoWay, ThreeWaySpectatorA4
  int i2 = -1;            // ThreeWay*, FourWay
  int i3 = -1;            // ThreeWaySpectatorA4, FourWay
  int i4 = -1;            // ThreeWaySpectatorA3, FourWay

  /// TeX-ish name, e.g. "D_{(A3)0(A4)1}^{00}", "D_{(A4)1}^{001}", "D^{0101}".
  std::string label() const;
};

Complex font_value(const StateVector& state, const FontIndex& which);

}  // namespace qtangle
