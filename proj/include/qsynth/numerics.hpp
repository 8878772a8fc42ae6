// Dense complex linear algebra shared by every other module: matrices,
// state vectors, and the comparison primitive used in all verification.
//
// Conventions fixed here and inherited project-wide:
//   - row-major storage
//   - basis label k has qubit 1 as the most significant bit,
//     k = k1*2^(n-1) + k2*2^(n-2) + ... + kn*2^0
//   - comparisons use absolute tolerance (entries have magnitude <= 1)

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsynth {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

/// Absolute tolerances: abs_tol for matrix comparisons, zero_tol for
/// deciding whether an entry counts as a structural zero.
struct Tolerance {
  double abs_tol = 1e-10;
  double zero_tol = 1e-12;

  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// Row-major N x N complex matrix. Constructors reject non-finite entries
/// and zero dimension.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim);
  DenseMatrix(std::size_t dim, std::vector<Complex> entries);

  static DenseMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Amplitudes of an n-qubit state, length 2^n, qubit 1 = most significant bit.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }

  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  std::vector<Complex>& amplitudes() { return amplitudes_; }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Standard complex matrix product. Throws on dimension mismatch.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

/// Kronecker product with a's indices as the high-order block, matching the
/// qubit-1-is-MSB convention.
DenseMatrix mat_tensor(const DenseMatrix& a, const DenseMatrix& b);

/// Conjugate transpose.
DenseMatrix mat_adjoint(const DenseMatrix& a);

/// Matrix-vector product; requires a.dim() == 2^(v.n_qubits()).
StateVector apply_to_vector(const DenseMatrix& a, const StateVector& v);

/// Max over entries of |a - b|; the comparison primitive for every
/// verification check in the project. Throws on dimension mismatch.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Same comparison for state vectors.
double max_abs_diff(const StateVector& a, const StateVector& b);

/// Normalized pseudo-random state, deterministic for a given seed.
StateVector random_state(int n_qubits, std::uint64_t seed);

}  // namespace qsynth
