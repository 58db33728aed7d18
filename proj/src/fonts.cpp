#include "qtangle/fonts.hpp"

#include <stdexcept>

namespace qtangle {

namespace {

void require_four_qubits(const StateVector& state) {
  if (state.n_qubits() != 4)
    throw std::invalid_argument("fonts are defined for 4-qubit states, got " +
                                std::to_string(state.n_qubits()) + " qubits");
}

int checked_bit(int b, const char* name) {
  if (b != 0 && b != 1)
    throw std::invalid_argument(std::string("font index ") + name + " must be 0 or 1");
  return b;
}

}  // namespace

Complex two_way_font(const StateVector& s, int i3, int i4) {
  require_four_qubits(s);
  checked_bit(i3, "i3");
  checked_bit(i4, "i4");
  return s.a(0, 0, i3, i4) * s.a(1, 1, i3, i4) - s.a(0, 1, i3, i4) * s.a(1, 0, i3, i4);
}

Complex three_way_font_spectator_a3(const StateVector& s, int i3, int i2, int i4) {
  require_four_qubits(s);
  checked_bit(i3, "i3");
  checked_bit(i2, "i2");
  checked_bit(i4, "i4");
  return s.a(0, i2, i3, i4) * s.a(1, i2 ^ 1, i3, i4 ^ 1) -
         s.a(0, i2 ^ 1, i3, i4 ^ 1) * s.a(1, i2, i3, i4);
}

Complex three_way_font_spectator_a4(const StateVector& s, int i4, int i2, int i3) {
  require_four_qubits(s);
  checked_bit(i4, "i4");
  checked_bit(i2, "i2");
  checked_bit(i3, "i3");
  return s.a(0, i2, i3, i4) * s.a(1, i2 ^ 1, i3 ^ 1, i4) -
         s.a(0, i2 ^ 1, i3 ^ 1, i4) * s.a(1, i2, i3, i4);
}

Complex four_way_font(const StateVector& s, int i2, int i3, int i4) {
  require_four_qubits(s);
  checked_bit(i2, "i2");
  checked_bit(i3, "i3");
  checked_bit(i4, "i4");
  return s.a(0, i2, i3, i4) * s.a(1, i2 ^ 1, i3 ^ 1, i4 ^ 1) -
         s.a(0, i2 ^ 1, i3 ^ 1, i4 ^ 1) * s.a(1, i2, i3, i4);
}

FontIndex FontIndex::two_way(int i3, int i4) {
  FontIndex f{Kind::TwoWay};
  f.spectator_a3 = checked_bit(i3, "i3");
  f.spectator_a4 = checked_bit(i4, "i4");
  return f;
}

FontIndex FontIndex::three_way_a3(int i3, int i2, int i4) {
  FontIndex f{Kind::ThreeWaySpectatorA3};
  f.spectator_a3 = checked_bit(i3, "i3");
  f.i2 = checked_bit(i2, "i2");
  f.i4 = checked_bit(i4, "i4");
  return f;
}

FontIndex FontIndex::three_way_a4(int i4, int i2, int i3) {
  FontIndex f{Kind::ThreeWaySpectatorA4};
  f.spectator_a4 = checked_bit(i4, "i4");
  f.i2 = checked_bit(i2, "i2");
  f.i3 = checked_bit(i3, "i3");
  return f;
}

FontIndex FontIndex::four_way(int i2, int i3, int i4) {
  FontIndex f{Kind::FourWay};
  f.i2 = checked_bit(i2, "i2");
  f.i3 = checked_bit(i3, "i3");
  f.i4 = checked_bit(i4, "i4");
  return f;
}

std::string FontIndex::label() const {
  switch (kind) {
    case Kind::TwoWay:
      return "D_{(A3)" + std::to_string(spectator_a3) + "(A4)" + std::to_string(spectator_a4) +
             "}^{00}";
    case Kind::ThreeWaySpectatorA3:
      return "D_{(A3)" + std::to_string(spectator_a3) + "}^{0" + std::to_string(i2) +
             std::to_string(i4) + "}";
    case Kind::ThreeWaySpectatorA4:
      return "D_{(A4)" + std::to_string(spectator_a4) + "}^{0" + std::to_string(i2) +
             std::to_string(i3) + "}";
    case Kind::FourWay:
      return "D^{0" + std::to_string(i2) + std::to_string(i3) + std::to_string(i4) + "}";
  }
  return "D?";
}

Complex font_value(const StateVector& state, const FontIndex& which) {
  switch (which.kind) {
    case FontIndex::Kind::TwoWay:
      return two_way_font(state, which.spectator_a3, which.spectator_a4);
    case FontIndex::Kind::ThreeWaySpectatorA3:
      return three_way_font_spectator_a3(state, which.spectator_a3, which.i2, which.i4);
    case FontIndex::Kind::ThreeWaySpectatorA4:
      return three_way_font_spectator_a4(state, which.spectator_a4, which.i2, which.i3);
    case FontIndex::Kind::FourWay:
      return four_way_font(state, which.i2, which.i3, which.i4);
  }
  throw std::logic_error("unreachable font kind");
}

}  // namespace qtangle
