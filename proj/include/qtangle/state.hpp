#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qtangle {

using Complex = std::complex<double>;

enum class Qubit : int { A1 = 0, A2 = 1, A3 = 2, A4 = 3 };

const char* to_string(Qubit q);
Qubit qubit_from_string(const std::string& s);

/// Dense amplitude vector of an n-qubit pure state (n = 3 or 4).
///
/// The amplitude a_{i1 i2 i3 i4} of a four-qubit state sits at flat index
/// i1*8 + i2*4 + i3*2 + i4, i.e. A1 is the most significant bit. Three-qubit
/// states use the same big-endian layout with A1 at i1*4.
///
/// No normalization is imposed: the polynomial invariants are homogeneous,
/// so unnormalized states are meaningful inputs. The all-zero state is
/// accepted and flagged via degenerate().
class StateVector {
 public:
  /// Throws std::invalid_argument unless n_qubits is 3 or 4, the amplitude
  /// count is 2^n_qubits, and every entry is finite.
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t flat) const { return amps_[flat]; }

  /// Amplitude by per-qubit bits (four-qubit states only).
  const Complex& a(int i1, int i2, int i3, int i4) const {
    return amps_[static_cast<std::size_t>(i1 * 8 + i2 * 4 + i3 * 2 + i4)];
  }

  double norm_squared() const;
  bool degenerate() const;  // every amplitude exactly zero

  StateVector scaled(Complex c) const;
  StateVector normalized() const;  // throws on the degenerate state

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

enum class Builtin { Ghz4, W4, Cluster4, Product4, Ghz3 };

StateVector builtin_state(Builtin which);
StateVector builtin_state(const std::string& name);  // throws on unknown name
std::vector<std::string> builtin_names();

/// 2x2 complex matrix, row-major: [[m00, m01], [m10, m11]].
struct Mat2 {
  Complex m00, m01, m10, m11;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
  Complex det() const { return m00 * m11 - m01 * m10; }
  bool finite() const;
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);

/// The determinant-one map (1/sqrt(1+|y|^2)) [[1, -conj(y)], [y, 1]].
/// u_of_y(0) is the exact identity matrix.
Mat2 u_of_y(Complex y);

/// A 2x2 matrix acting on one named qubit.
struct LocalOperator {
  Mat2 matrix;
  Qubit target;
};

/// Contracts the 2x2 matrix onto the target qubit index; the input state is
/// left untouched. Throws if the target is out of range for the state.
StateVector apply_local(const StateVector& state, const LocalOperator& op);

/// Bijective relabeling of qubit slots. new_position[p] is the slot the
/// qubit at position p moves to.
class QubitPermutation {
 public:
  explicit QubitPermutation(std::vector<int> new_position);  // must be a bijection

  static QubitPermutation identity(int n_qubits);
  static QubitPermutation swap(int n_qubits, Qubit a, Qubit b);
  /// Sends q to the last slot; the others keep their relative order.
  static QubitPermutation move_to_back(int n_qubits, Qubit q);

  QubitPermutation inverse() const;
  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int position) const { return map_[static_cast<std::size_t>(position)]; }

 private:
  std::vector<int> map_;
};

StateVector permute_qubits(const StateVector& state, const QubitPermutation& perm);

/// Deterministic random source. All randomness in the library flows through
/// this generator so that runs are reproducible from a single 64-bit seed:
///   - the raw stream is std::mt19937_64 (output sequence fixed by the
///     standard), mapped to [0,1) doubles via (x >> 11) * 2^-53;
///   - complex Gaussians CN(0,1) are sqrt(-log u) * exp(2*pi*i*v);
///   - Haar SU(2) uses the two-angle-plus-phase parametrization
///     [[cos(t) e^{i psi}, -sin(t) e^{-i phi}], [sin(t) e^{i phi}, cos(t) e^{-i psi}]]
///     with sin^2(t) uniform on [0,1);
///   - Haar U(2) multiplies an SU(2) sample by a uniform phase.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform01();                 // [0, 1)
  double uniform(double lo, double hi);
  Complex complex_normal();           // standard complex Gaussian
  Complex uniform_disk(double radius);
  Mat2 haar_su2();
  Mat2 haar_u2();

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 mix of (master, index); used to give independent per-trial
/// seeds that do not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// i.i.d. CN(0,1) amplitudes, then normalized; draws 2^n values from rng.
StateVector sample_state(Rng& rng, int n_qubits);

/// sample_state from a fresh generator. Same seed, same bits.
StateVector random_state(int n_qubits, std::uint64_t seed);
Mat2 random_su2(std::uint64_t seed);
Mat2 random_u2(std::uint64_t seed);

}  // namespace qtangle
