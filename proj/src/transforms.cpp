#include "qsynth/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsynth {

namespace {

double sign_value(FourierSign sign) {
  return sign == FourierSign::kNegative ? -1.0 : 1.0;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// e^{sign*2*pi*i*k/n} with the angle reduced before evaluation so large
// index products stay accurate.
Complex unit_root(FourierSign sign, std::size_t k, std::size_t n) {
  const double angle = sign_value(sign) * kTwoPi *
                       static_cast<double>(k % n) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

}  // namespace

DenseMatrix dft_matrix(std::size_t n_points, DftConvention conv) {
  if (n_points < 1) {
    throw std::invalid_argument("dft_matrix needs at least one point");
  }
  const double scale = conv.norm == FourierNorm::kUnitary
                           ? 1.0 / std::sqrt(static_cast<double>(n_points))
                           : 1.0;
  DenseMatrix out(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    for (std::size_t m = 0; m < n_points; ++m) {
      out(k, m) = scale * unit_root(conv.sign, k * m, n_points);
    }
  }
  return out;
}

Signal fft_radix2(const Signal& s, DftConvention conv) {
  const std::size_t n = s.size();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("fft_radix2 needs a power-of-two length, got " +
                                std::to_string(n));
  }
  int bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;

  Signal out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rev = 0;
    for (int b = 0; b < bits; ++b) {
      rev = (rev << 1) | ((i >> b) & 1u);
    }
    out[rev] = s[i];
  }

  const double sgn = sign_value(conv.sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex w = std::polar(
            1.0, sgn * kTwoPi * static_cast<double>(j) /
                     static_cast<double>(len));
        const Complex even = out[start + j];
        const Complex odd = w * out[start + j + half];
        out[start + j] = even + odd;
        out[start + j + half] = even - odd;
      }
    }
  }

  if (conv.norm == FourierNorm::kUnitary) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Complex& z : out) z *= scale;
  }
  return out;
}

DenseMatrix twiddle_diagonal(std::size_t n_points, FourierSign sign) {
  if (n_points == 0 || n_points % 2 != 0) {
    throw std::invalid_argument("twiddle_diagonal needs an even size, got " +
                                std::to_string(n_points));
  }
  const std::size_t half = n_points / 2;
  DenseMatrix out(half);
  for (std::size_t k = 0; k < half; ++k) {
    out(k, k) = unit_root(sign, k, n_points);
  }
  return out;
}

DenseMatrix a_matrix_tensor(int n_qubits, FourierSign sign) {
  if (n_qubits < 2) {
    throw std::invalid_argument("a_matrix_tensor needs n >= 2, got " +
                                std::to_string(n_qubits));
  }
  DenseMatrix out(1);
  out(0, 0) = Complex{1.0, 0.0};
  for (int k = 2; k <= n_qubits; ++k) {
    DenseMatrix factor(2);
    factor(0, 0) = Complex{1.0, 0.0};
    factor(1, 1) = unit_root(sign, 1, std::size_t{1} << k);
    out = mat_tensor(out, factor);
  }
  return out;
}

std::vector<std::size_t> even_odd_shuffle(std::size_t n_points) {
  if (n_points == 0 || n_points % 2 != 0) {
    throw std::invalid_argument("even_odd_shuffle needs an even size, got " +
                                std::to_string(n_points));
  }
  std::vector<std::size_t> perm(n_points);
  const std::size_t half = n_points / 2;
  for (std::size_t m = 0; m < half; ++m) {
    perm[m] = 2 * m;
    perm[half + m] = 2 * m + 1;
  }
  return perm;
}

DenseMatrix dft_recursion_build(std::size_t n_points, FourierSign sign) {
  if (!is_power_of_two(n_points)) {
    throw std::invalid_argument(
        "dft_recursion_build needs a power-of-two size, got " +
        std::to_string(n_points));
  }
  if (n_points == 1) {
    DenseMatrix out(1);
    out(0, 0) = Complex{1.0, 0.0};
    return out;
  }
  if (n_points == 2) {
    DenseMatrix out(2);
    out(0, 0) = Complex{kInvSqrt2, 0.0};
    out(0, 1) = Complex{kInvSqrt2, 0.0};
    out(1, 0) = Complex{kInvSqrt2, 0.0};
    out(1, 1) = Complex{-kInvSqrt2, 0.0};
    return out;
  }

  const std::size_t half = n_points / 2;
  const DenseMatrix sub = dft_recursion_build(half, sign);
  const DenseMatrix twiddle = twiddle_diagonal(n_points, sign);

  // Column 2m of the product picks column m of the half transform in both
  // row blocks; column 2m+1 picks it twiddled, with the lower block negated.
  DenseMatrix out(n_points);
  for (std::size_t m = 0; m < half; ++m) {
    for (std::size_t k = 0; k < half; ++k) {
      const Complex plain = kInvSqrt2 * sub(k, m);
      const Complex twisted = twiddle(k, k) * plain;
      out(k, 2 * m) = plain;
      out(half + k, 2 * m) = plain;
      out(k, 2 * m + 1) = twisted;
      out(half + k, 2 * m + 1) = -twisted;
    }
  }
  return out;
}

DenseMatrix qft_reference_matrix(int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("qft_reference_matrix needs n >= 1, got " +
                                std::to_string(n_qubits));
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double scale = std::pow(2.0, -0.5 * n_qubits);
  DenseMatrix out(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t k = 0; k < dim; ++k) {
      out(m, k) = scale * unit_root(FourierSign::kPositive, k * m, dim);
    }
  }
  return out;
}

std::vector<std::size_t> bit_reversal_perm(int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("bit_reversal_perm needs n >= 1, got " +
                                std::to_string(n_qubits));
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t rev = 0;
    for (int b = 0; b < n_qubits; ++b) {
      rev = (rev << 1) | ((i >> b) & 1u);
    }
    perm[i] = rev;
  }
  return perm;
}

}  // namespace qsynth
