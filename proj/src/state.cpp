#include "qtangle/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtangle {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::size_t dim_for(int n_qubits) { return std::size_t{1} << n_qubits; }

}  // namespace

const char* to_string(Qubit q) {
  switch (q) {
    case Qubit::A1: return "A1";
    case Qubit::A2: return "A2";
    case Qubit::A3: return "A3";
    case Qubit::A4: return "A4";
  }
  return "?";
}

Qubit qubit_from_string(const std::string& s) {
  if (s == "A1") return Qubit::A1;
  if (s == "A2") return Qubit::A2;
  if (s == "A3") return Qubit::A3;
  if (s == "A4") return Qubit::A4;
  throw std::invalid_argument("unknown qubit label \"" + s + "\" (expected A1..A4)");
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ != 3 && n_qubits_ != 4)
    throw std::invalid_argument("unsupported qubit count " + std::to_string(n_qubits_) +
                                " (3 or 4 supported)");
  if (amps_.size() != dim_for(n_qubits_))
    throw std::invalid_argument("expected " + std::to_string(dim_for(n_qubits_)) +
                                " amplitudes for " + std::to_string(n_qubits_) +
                                " qubits, got " + std::to_string(amps_.size()));
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (!is_finite(amps_[i]))
      throw std::invalid_argument("non-finite amplitude at index " + std::to_string(i));
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& z : amps_) s += std::norm(z);
  return s;
}

bool StateVector::degenerate() const {
  return std::all_of(amps_.begin(), amps_.end(),
                     [](Complex z) { return z == Complex{0.0, 0.0}; });
}

StateVector StateVector::scaled(Complex c) const {
  std::vector<Complex> out(amps_);
  for (Complex& z : out) z *= c;
  return StateVector(n_qubits_, std::move(out));
}

StateVector StateVector::normalized() const {
  const double n2 = norm_squared();
  if (n2 == 0.0) throw std::domain_error("cannot normalize the all-zero state");
  return scaled(1.0 / std::sqrt(n2));
}

StateVector builtin_state(Builtin which) {
  const double s2 = 1.0 / std::sqrt(2.0);
  switch (which) {
    case Builtin::Ghz4: {
      std::vector<Complex> a(16, 0.0);
      a[0b0000] = s2;
      a[0b1111] = s2;
      return StateVector(4, std::move(a));
    }
    case Builtin::W4: {
      std::vector<Complex> a(16, 0.0);
      a[0b0001] = 0.5;
      a[0b0010] = 0.5;
      a[0b0100] = 0.5;
      a[0b1000] = 0.5;
      return StateVector(4, std::move(a));
    }
    case Builtin::Cluster4: {
      std::vector<Complex> a(16, 0.0);
      a[0b0000] = 0.5;
      a[0b0011] = 0.5;
      a[0b1100] = 0.5;
      a[0b1111] = -0.5;
      return StateVector(4, std::move(a));
    }
    case Builtin::Product4: {
      std::vector<Complex> a(16, 0.0);
      a[0b0000] = 1.0;
      return StateVector(4, std::move(a));
    }
    case Builtin::Ghz3: {
      std::vector<Complex> a(8, 0.0);
      a[0b000] = s2;
      a[0b111] = s2;
      return StateVector(3, std::move(a));
    }
  }
  throw std::invalid_argument("unknown builtin state");
}

StateVector builtin_state(const std::string& name) {
  if (name == "ghz4") return builtin_state(Builtin::Ghz4);
  if (name == "w4") return builtin_state(Builtin::W4);
  if (name == "cluster4") return builtin_state(Builtin::Cluster4);
  if (name == "product4") return builtin_state(Builtin::Product4);
  if (name == "ghz3") return builtin_state(Builtin::Ghz3);
  throw std::invalid_argument("unknown builtin state \"" + name + "\"");
}

std::vector<std::string> builtin_names() {
  return {"ghz4", "w4", "cluster4", "product4", "ghz3"};
}

bool Mat2::finite() const {
  return is_finite(m00) && is_finite(m01) && is_finite(m10) && is_finite(m11);
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.m00 * rhs.m00 + lhs.m01 * rhs.m10, lhs.m00 * rhs.m01 + lhs.m01 * rhs.m11,
          lhs.m10 * rhs.m00 + lhs.m11 * rhs.m10, lhs.m10 * rhs.m01 + lhs.m11 * rhs.m11};
}

Mat2 u_of_y(Complex y) {
  if (!is_finite(y)) throw std::invalid_argument("u_of_y: non-finite parameter");
  const double n = 1.0 / std::sqrt(1.0 + std::norm(y));
  return {n, -std::conj(y) * n, y * n, n};
}

StateVector apply_local(const StateVector& state, const LocalOperator& op) {
  const int q = static_cast<int>(op.target);
  if (q < 0 || q >= state.n_qubits())
    throw std::invalid_argument(std::string("target qubit ") + to_string(op.target) +
                                " out of range for a " + std::to_string(state.n_qubits()) +
                                "-qubit state");
  if (!op.matrix.finite()) throw std::invalid_argument("apply_local: non-finite matrix entry");

  // Bit within the flat index addressed by this qubit (A1 most significant).
  const std::size_t bit = std::size_t{1} << (state.n_qubits() - 1 - q);
  const std::size_t dim = state.dim();
  const Mat2& m = op.matrix;

  std::vector<Complex> out(dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & bit) continue;
    const Complex lo = state[base];
    const Complex hi = state[base | bit];
    out[base] = m.m00 * lo + m.m01 * hi;
    out[base | bit] = m.m10 * lo + m.m11 * hi;
  }
  return StateVector(state.n_qubits(), std::move(out));
}

QubitPermutation::QubitPermutation(std::vector<int> new_position) : map_(std::move(new_position)) {
  const int n = static_cast<int>(map_.size());
  if (n != 3 && n != 4) throw std::invalid_argument("permutation must cover 3 or 4 qubits");
  std::vector<bool> seen(map_.size(), false);
  for (int p : map_) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("qubit permutation is not a bijection");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

QubitPermutation QubitPermutation::identity(int n_qubits) {
  std::vector<int> m(static_cast<std::size_t>(n_qubits));
  for (int i = 0; i < n_qubits; ++i) m[static_cast<std::size_t>(i)] = i;
  return QubitPermutation(std::move(m));
}

QubitPermutation QubitPermutation::swap(int n_qubits, Qubit a, Qubit b) {
  auto perm = identity(n_qubits);
  const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
  if (ia >= perm.map_.size() || ib >= perm.map_.size())
    throw std::invalid_argument("swap: qubit label out of range");
  std::swap(perm.map_[ia], perm.map_[ib]);
  return perm;
}

QubitPermutation QubitPermutation::move_to_back(int n_qubits, Qubit q) {
  const int qi = static_cast<int>(q);
  if (qi < 0 || qi >= n_qubits) throw std::invalid_argument("move_to_back: qubit label out of range");
  std::vector<int> m(static_cast<std::size_t>(n_qubits));
  int slot = 0;
  for (int p = 0; p < n_qubits; ++p)
    m[static_cast<std::size_t>(p)] = (p == qi) ? n_qubits - 1 : slot++;
  return QubitPermutation(std::move(m));
}

QubitPermutation QubitPermutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t p = 0; p < map_.size(); ++p) inv[static_cast<std::size_t>(map_[p])] = static_cast<int>(p);
  return QubitPermutation(std::move(inv));
}

StateVector permute_qubits(const StateVector& state, const QubitPermutation& perm) {
  const int n = state.n_qubits();
  if (perm.size() != n)
    throw std::invalid_argument("permutation arity " + std::to_string(perm.size()) +
                                " does not match a " + std::to_string(n) + "-qubit state");
  std::vector<Complex> out(state.dim());
  for (std::size_t flat = 0; flat < state.dim(); ++flat) {
    std::size_t target = 0;
    for (int p = 0; p < n; ++p) {
      const std::size_t bit = (flat >> (n - 1 - p)) & 1u;
      target |= bit << (n - 1 - perm(p));
    }
    out[target] = state[flat];
  }
  return StateVector(n, std::move(out));
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

Complex Rng::complex_normal() {
  // u in (0, 1] so the log is finite.
  const double u = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double v = uniform01();
  const double r = std::sqrt(-std::log(u));
  return std::polar(r, 2.0 * std::numbers::pi * v);
}

Complex Rng::uniform_disk(double radius) {
  const double r = radius * std::sqrt(uniform01());
  return std::polar(r, 2.0 * std::numbers::pi * uniform01());
}

Mat2 Rng::haar_su2() {
  const double theta = std::asin(std::sqrt(uniform01()));
  const double psi = 2.0 * std::numbers::pi * uniform01();
  const double phi = 2.0 * std::numbers::pi * uniform01();
  const Complex alpha = std::polar(std::cos(theta), psi);
  const Complex beta = std::polar(std::sin(theta), phi);
  return {alpha, -std::conj(beta), beta, std::conj(alpha)};
}

Mat2 Rng::haar_u2() {
  Mat2 m = haar_su2();
  const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * uniform01());
  return {m.m00 * phase, m.m01 * phase, m.m10 * phase, m.m11 * phase};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the master stream position.
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

StateVector sample_state(Rng& rng, int n_qubits) {
  if (n_qubits != 3 && n_qubits != 4)
    throw std::invalid_argument("random_state supports 3 or 4 qubits");
  std::vector<Complex> a(dim_for(n_qubits));
  for (Complex& z : a) z = rng.complex_normal();
  return StateVector(n_qubits, std::move(a)).normalized();
}

StateVector random_state(int n_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return sample_state(rng, n_qubits);
}

Mat2 random_su2(std::uint64_t seed) { return Rng(seed).haar_su2(); }

Mat2 random_u2(std::uint64_t seed) { return Rng(seed).haar_u2(); }

}  // namespace qtangle
