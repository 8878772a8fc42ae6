// Fourier-transform references: dense DFT matrices, a radix-2 FFT, the
// half-size matrix recursion with twiddle diagonals, and the index
// permutations that tie the matrix picture to the circuit picture.
//
// Sign and normalization are explicit everywhere because the common
// conventions disagree: signal processing uses exponent sign - with no
// normalization, while the quantum transform uses sign + with a 1/sqrt(N)
// factor per application. qft_reference_matrix equals the adjoint of the
// unitary sign-minus DFT matrix.

#pragma once

#include <cstddef>
#include <vector>

#include "qsynth/numerics.hpp"

namespace qsynth {

enum class FourierSign {
  kNegative,  // e^{-2*pi*i*km/N}
  kPositive,  // e^{+2*pi*i*km/N}
};

enum class FourierNorm {
  kNone,
  kUnitary,  // 1/sqrt(N) per application
};

struct DftConvention {
  FourierSign sign = FourierSign::kNegative;
  FourierNorm norm = FourierNorm::kNone;

  friend bool operator==(const DftConvention&, const DftConvention&) = default;
};

using Signal = std::vector<Complex>;

/// Dense N x N transform matrix with entries norm * e^{sign*2*pi*i*k*m/N}.
DenseMatrix dft_matrix(std::size_t n_points, DftConvention conv);

/// Radix-2 evaluation of the same transform; N must be a power of two.
Signal fft_radix2(const Signal& s, DftConvention conv);

/// (N/2) x (N/2) diagonal of twiddle factors diag(1, w, w^2, ...) with
/// w = e^{sign*2*pi*i/N}. N must be even.
DenseMatrix twiddle_diagonal(std::size_t n_points, FourierSign sign);

/// Tensor product over k = 2 ... n of diag(1, e^{sign*2*pi*i/2^k}), k = 2
/// factor most significant; a 2^{n-1} diagonal. For sign minus this equals
/// twiddle_diagonal(2^n, minus) entry for entry. Requires n >= 2.
DenseMatrix a_matrix_tensor(int n_qubits, FourierSign sign);

/// Permutation sorting even source indices (ascending) before odd ones;
/// result[p] is the source index landing at position p. N must be even.
std::vector<std::size_t> even_odd_shuffle(std::size_t n_points);

/// Builds the unitary sign-`sign` DFT matrix by the half-size recursion
///   F_N = (1/sqrt(2)) [[F, A*F], [F, -A*F]] * S
/// with A the twiddle diagonal and S the even/odd shuffle on the input side
/// (without S the right-hand side acts on (evens, odds)-ordered input and the
/// identity fails). Bottoms out at the exact 2x2 transform.
DenseMatrix dft_recursion_build(std::size_t n_points,
                                FourierSign sign = FourierSign::kNegative);

/// Entry (m, k) = 2^{-n/2} e^{+2*pi*i*k*m/2^n}.
DenseMatrix qft_reference_matrix(int n_qubits);

/// result[i] = i with its n-bit binary expansion reversed.
std::vector<std::size_t> bit_reversal_perm(int n_qubits);

}  // namespace qsynth
