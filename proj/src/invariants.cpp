#include "qtangle/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace qtangle {

namespace {

void require_four_qubits(const StateVector& state) {
  if (state.n_qubits() != 4)
    throw std::invalid_argument("invariants are defined for 4-qubit states, got " +
                                std::to_string(state.n_qubits()) + " qubits");
}

constexpr double kNormTolerance = 1e-9;

// D^{0000} + D^{0001} + D^{0010} + D^{0011}.
Complex four_way_sum(const StateVector& s) {
  return four_way_font(s, 0, 0, 0) + four_way_font(s, 0, 0, 1) + four_way_font(s, 0, 1, 0) +
         four_way_font(s, 0, 1, 1);
}

// D_{(A3)i3}^{000} + D_{(A3)i3}^{001}  (superscript bits are i2, i4).
Complex three_a3_pair_sum(const StateVector& s, int i3) {
  return three_way_font_spectator_a3(s, i3, 0, 0) + three_way_font_spectator_a3(s, i3, 0, 1);
}

// D_{(A4)i4}^{000} + D_{(A4)i4}^{001}  (superscript bits are i2, i3).
Complex three_a4_pair_sum(const StateVector& s, int i4) {
  return three_way_font_spectator_a4(s, i4, 0, 0) + three_way_font_spectator_a4(s, i4, 0, 1);
}

}  // namespace

Complex i3_spectator(const StateVector& state, int i4) {
  require_four_qubits(state);
  const Complex diff =
      three_way_font_spectator_a4(state, i4, 0, 0) - three_way_font_spectator_a4(state, i4, 1, 0);
  return diff * diff - 4.0 * two_way_font(state, 0, i4) * two_way_font(state, 1, i4);
}

Complex t_invariant(const StateVector& state) {
  require_four_qubits(state);
  const Complex sum = four_way_sum(state);
  return sum * sum / 6.0 -
         (2.0 / 3.0) * three_a3_pair_sum(state, 0) * three_a3_pair_sum(state, 1) +
         (1.0 / 3.0) * three_a4_pair_sum(state, 0) * three_a4_pair_sum(state, 1) -
         (2.0 / 3.0) * (two_way_font(state, 0, 0) * two_way_font(state, 1, 1) +
                        two_way_font(state, 1, 0) * two_way_font(state, 0, 1));
}

Complex p_invariant(const StateVector& state, int i4) {
  require_four_qubits(state);
  return 0.5 * three_a4_pair_sum(state, i4) * four_way_sum(state) -
         (two_way_font(state, 1, i4) * three_a3_pair_sum(state, 0) +
          two_way_font(state, 0, i4) * three_a3_pair_sum(state, 1));
}

Complex i48(const StateVector& state) {
  require_four_qubits(state);
  const Complex t = t_invariant(state);
  return 3.0 * t * t + i3_spectator(state, 0) * i3_spectator(state, 1) -
         4.0 * p_invariant(state, 0) * p_invariant(state, 1);
}

Complex j_invariant(const StateVector& state) {
  require_four_qubits(state);
  const Complex a = i3_spectator(state, 1);
  const Complex b = p_invariant(state, 1);
  const Complex c = t_invariant(state);
  const Complex d = p_invariant(state, 0);
  const Complex f = i3_spectator(state, 0);
  // det [[a, b, c], [b, c, d], [c, d, f]]
  return a * (c * f - d * d) - b * (b * f - d * c) + c * (b * d - c * c);
}

Complex discriminant(const StateVector& state) {
  const Complex i = i48(state);
  const Complex j = j_invariant(state);
  return i * i * i - 27.0 * j * j;
}

double tau4(const StateVector& state) {
  require_four_qubits(state);
  if (std::abs(state.norm_squared() - 1.0) > kNormTolerance)
    throw std::domain_error("tau4 requires a normalized state (norm_squared within 1e-9 of 1)");
  return 4.0 * std::sqrt(12.0 * std::abs(i48(state)));
}

Complex transformed_i3(const StateVector& state, Complex y) {
  require_four_qubits(state);
  const Complex w = std::conj(y);
  const Complex w2 = w * w;
  const Complex numerator = w2 * w2 * i3_spectator(state, 1) - 4.0 * w2 * w * p_invariant(state, 1) +
                            6.0 * w2 * t_invariant(state) - 4.0 * w * p_invariant(state, 0) +
                            i3_spectator(state, 0);
  const double denom = 1.0 + std::norm(y);
  return numerator / (denom * denom);
}

StateVector embed_with_a4_zero(const StateVector& three_qubit_state) {
  if (three_qubit_state.n_qubits() != 3)
    throw std::invalid_argument("embedding expects a 3-qubit state, got " +
                                std::to_string(three_qubit_state.n_qubits()) + " qubits");
  std::vector<Complex> a(16, 0.0);
  for (std::size_t i = 0; i < 8; ++i) a[i << 1] = three_qubit_state[i];
  return StateVector(4, std::move(a));
}

double tau3(const StateVector& three_qubit_state) {
  if (three_qubit_state.n_qubits() != 3)
    throw std::invalid_argument("tau3 expects a 3-qubit state, got " +
                                std::to_string(three_qubit_state.n_qubits()) + " qubits");
  if (std::abs(three_qubit_state.norm_squared() - 1.0) > kNormTolerance)
    throw std::domain_error("tau3 requires a normalized state (norm_squared within 1e-9 of 1)");
  return 4.0 * std::abs(i3_spectator(embed_with_a4_zero(three_qubit_state), 0));
}

QuarticInvariants quartic_invariants(const QuarticCoefficients& q) {
  QuarticInvariants out;
  out.s = q.a * q.f - 4.0 * q.b * q.d + 3.0 * q.c * q.c;
  out.t_cubic =
      q.a * q.c * q.f - q.a * q.d * q.d - q.b * q.b * q.f + 2.0 * q.b * q.c * q.d - q.c * q.c * q.c;
  out.delta = out.s * out.s * out.s - 27.0 * out.t_cubic * out.t_cubic;
  return out;
}

std::vector<LabeledValue> two_qubit_invariant_list(const StateVector& state) {
  require_four_qubits(state);
  std::vector<LabeledValue> out;
  out.reserve(14);
  for (int i3 = 0; i3 < 2; ++i3)
    for (int i4 = 0; i4 < 2; ++i4)
      out.push_back({FontIndex::two_way(i3, i4).label(), two_way_font(state, i3, i4)});
  for (int i3 = 0; i3 < 2; ++i3)
    for (int i4 = 0; i4 < 2; ++i4)
      out.push_back({"D_{(A3)" + std::to_string(i3) + "}^{00" + std::to_string(i4) +
                         "}-D_{(A3)" + std::to_string(i3) + "}^{01" + std::to_string(i4) + "}",
                     three_way_font_spectator_a3(state, i3, 0, i4) -
                         three_way_font_spectator_a3(state, i3, 1, i4)});
  for (int i4 = 0; i4 < 2; ++i4)
    for (int i3 = 0; i3 < 2; ++i3)
      out.push_back({"D_{(A4)" + std::to_string(i4) + "}^{00" + std::to_string(i3) +
                         "}-D_{(A4)" + std::to_string(i4) + "}^{01" + std::to_string(i3) + "}",
                     three_way_font_spectator_a4(state, i4, 0, i3) -
                         three_way_font_spectator_a4(state, i4, 1, i3)});
  out.push_back({"D^{0000}-D^{0100}", four_way_font(state, 0, 0, 0) - four_way_font(state, 1, 0, 0)});
  out.push_back({"D^{0001}-D^{0101}", four_way_font(state, 0, 0, 1) - four_way_font(state, 1, 0, 1)});
  return out;
}

InvariantReport full_report(const StateVector& state, Qubit distinguished) {
  require_four_qubits(state);

  InvariantReport report;
  report.distinguished = distinguished;

  if (state.degenerate()) {
    report.degenerate = true;
    report.two_qubit_invariants = two_qubit_invariant_list(state);  // all zeros
    return report;
  }

  const StateVector relabeled =
      permute_qubits(state, QubitPermutation::move_to_back(4, distinguished));

  report.i3_0 = i3_spectator(relabeled, 0);
  report.i3_1 = i3_spectator(relabeled, 1);
  report.p_0 = p_invariant(relabeled, 0);
  report.p_1 = p_invariant(relabeled, 1);
  report.t = t_invariant(relabeled);
  report.i48 = qtangle::i48(relabeled);
  report.j = j_invariant(relabeled);
  report.delta = discriminant(relabeled);
  report.tau4 = qtangle::tau4(relabeled);
  report.two_qubit_invariants = two_qubit_invariant_list(relabeled);
  return report;
}

}  // namespace qtangle
