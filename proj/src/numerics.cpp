#include "qsynth/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qsynth {

namespace {

void check_finite(const std::vector<Complex>& values, const char* what) {
  for (const Complex& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument(std::string(what) +
                                  ": non-finite entry rejected");
    }
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
  if (dim < 1) {
    throw std::invalid_argument("DenseMatrix: dim must be >= 1");
  }
}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) {
    throw std::invalid_argument("DenseMatrix: dim must be >= 1");
  }
  if (entries_.size() != dim * dim) {
    throw std::invalid_argument("DenseMatrix: entry count must equal dim^2");
  }
  check_finite(entries_, "DenseMatrix");
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = Complex{1.0, 0.0};
  }
  return m;
}

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits),
      amplitudes_(std::size_t{1} << std::max(n_qubits, 0), Complex{0.0, 0.0}) {
  if (n_qubits < 0) {
    throw std::invalid_argument("StateVector: n_qubits must be >= 0");
  }
  amplitudes_[0] = Complex{1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 0) {
    throw std::invalid_argument("StateVector: n_qubits must be >= 0");
  }
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^n");
  }
  check_finite(amplitudes_, "StateVector");
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  StateVector v(n_qubits);
  if (index >= v.size()) {
    throw std::invalid_argument("StateVector::basis: index out of range");
  }
  v[0] = Complex{0.0, 0.0};
  v[index] = Complex{1.0, 0.0};
  return v;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  const std::size_t n = a.dim();
  DenseMatrix out(n);
  // ikj order keeps both b and out row accesses sequential.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

DenseMatrix mat_tensor(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  DenseMatrix out(da * db);
  for (std::size_t ra = 0; ra < da; ++ra) {
    for (std::size_t ca = 0; ca < da; ++ca) {
      const Complex f = a(ra, ca);
      for (std::size_t rb = 0; rb < db; ++rb) {
        for (std::size_t cb = 0; cb < db; ++cb) {
          out(ra * db + rb, ca * db + cb) = f * b(rb, cb);
        }
      }
    }
  }
  return out;
}

DenseMatrix mat_adjoint(const DenseMatrix& a) {
  const std::size_t n = a.dim();
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(c, r) = std::conj(a(r, c));
    }
  }
  return out;
}

StateVector apply_to_vector(const DenseMatrix& a, const StateVector& v) {
  if (a.dim() != v.size()) {
    throw std::invalid_argument("apply_to_vector: dimension mismatch");
  }
  std::vector<Complex> out(v.size(), Complex{0.0, 0.0});
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc{0.0, 0.0};
    for (std::size_t c = 0; c < n; ++c) {
      acc += a(r, c) * v[c];
    }
    out[r] = acc;
  }
  return StateVector(v.n_qubits(), std::move(out));
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  double worst = 0.0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    worst = std::max(worst, std::abs(ea[i] - eb[i]));
  }
  return worst;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

StateVector random_state(int n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << std::max(n_qubits, 0));
  double norm_sq = 0.0;
  for (Complex& z : amps) {
    z = Complex{gauss(rng), gauss(rng)};
    norm_sq += std::norm(z);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (Complex& z : amps) {
    z *= scale;
  }
  return StateVector(n_qubits, std::move(amps));
}

}  // namespace qsynth
