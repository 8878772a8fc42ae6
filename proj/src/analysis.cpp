#include "qsynth/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "qsynth/transforms.hpp"

namespace qsynth {

namespace {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string fmt(std::size_t value) { return std::to_string(value); }
std::string fmt(int value) { return std::to_string(value); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_string(SparsityVerdict verdict) {
  switch (verdict) {
    case SparsityVerdict::kDiagonal:
      return "diagonal";
    case SparsityVerdict::kGeneralizedPermutation:
      return "generalized-permutation";
    case SparsityVerdict::kFullyDense:
      return "fully-dense";
    case SparsityVerdict::kDense:
      return "dense";
    case SparsityVerdict::kSparse:
      return "sparse";
  }
  return "unknown";
}

std::string SparsityReport::to_text() const {
  std::string out;
  out += "dim = " + fmt(dim) + "\n";
  out += "nnz = " + fmt(nnz) + "\n";
  out += "density = " + fmt(density) + "\n";
  out += "min_nonzero_magnitude = " + fmt(min_nonzero_magnitude) + "\n";
  out += "max_magnitude = " + fmt(max_magnitude) + "\n";
  out += "verdict = " + to_string(verdict) + "\n";
  return out;
}

std::string EquivalenceReport::to_text() const {
  std::string out;
  out += std::string("equal_up_to_global_phase = ") +
         yes_no(equal_up_to_global_phase) + "\n";
  out += "best_phase = " + fmt(best_phase) + "\n";
  out += "residual = " + fmt(residual) + "\n";
  return out;
}

std::string ComplexityAudit::to_text() const {
  std::string out;
  out += std::string("all_match = ") + yes_no(all_match) + "\n";
  for (const Row& row : rows) {
    out += "n_" + fmt(row.n_qubits) + " = singles " + fmt(row.counts.singles) +
           " twos " + fmt(row.counts.twos) + " swaps " +
           fmt(row.counts.swaps) + " match " + yes_no(row.matches_formula) +
           "\n";
  }
  return out;
}

std::string NormReport::to_text() const {
  std::string out;
  out += "entrywise_l1 = " + fmt(entrywise_l1) + "\n";
  out += "max_column_sum = " + fmt(max_column_sum) + "\n";
  out += "max_row_sum = " + fmt(max_row_sum) + "\n";
  out += "frobenius = " + fmt(frobenius) + "\n";
  return out;
}

std::string BenchReport::to_text() const {
  std::string out;
  out += "n_qubits = " + fmt(n_qubits) + "\n";
  out += "trials = " + fmt(trials) + "\n";
  out += "streamed_median_seconds = " + fmt(streamed_median_seconds) + "\n";
  out += "dense_median_seconds = " + fmt(dense_median_seconds) + "\n";
  if (has_fft) {
    out += "fft_median_seconds = " + fmt(fft_median_seconds) + "\n";
  }
  out += "agreement_max_abs_diff = " + fmt(agreement_max_abs_diff) + "\n";
  return out;
}

SparsityReport sparsity_report(const DenseMatrix& m, const Tolerance& tol) {
  const std::size_t n = m.dim();
  SparsityReport report;
  report.dim = n;

  std::vector<std::size_t> row_nnz(n, 0);
  std::vector<std::size_t> col_nnz(n, 0);
  bool off_diagonal = false;
  double min_nonzero = 0.0;
  double max_mag = 0.0;
  std::size_t nnz = 0;

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double mag = std::abs(m(r, c));
      max_mag = std::max(max_mag, mag);
      if (mag <= tol.zero_tol) continue;
      ++nnz;
      ++row_nnz[r];
      ++col_nnz[c];
      if (r != c) off_diagonal = true;
      if (min_nonzero == 0.0 || mag < min_nonzero) min_nonzero = mag;
    }
  }

  report.nnz = nnz;
  report.density =
      n == 0 ? 0.0
             : static_cast<double>(nnz) / (static_cast<double>(n) *
                                           static_cast<double>(n));
  report.min_nonzero_magnitude = min_nonzero;
  report.max_magnitude = max_mag;

  const bool one_per_line =
      std::all_of(row_nnz.begin(), row_nnz.end(),
                  [](std::size_t k) { return k == 1; }) &&
      std::all_of(col_nnz.begin(), col_nnz.end(),
                  [](std::size_t k) { return k == 1; });

  if (!off_diagonal) {
    report.verdict = SparsityVerdict::kDiagonal;
  } else if (nnz == n && one_per_line) {
    report.verdict = SparsityVerdict::kGeneralizedPermutation;
  } else if (nnz == n * n) {
    report.verdict = SparsityVerdict::kFullyDense;
  } else if (report.density >= 0.5) {
    report.verdict = SparsityVerdict::kDense;
  } else {
    report.verdict = SparsityVerdict::kSparse;
  }
  return report;
}

std::string sparsity_discrepancy_note(const SparsityReport& report) {
  if (report.verdict != SparsityVerdict::kDiagonal &&
      report.verdict != SparsityVerdict::kGeneralizedPermutation) {
    return "";
  }
  return "discrepancy = verdict '" + to_string(report.verdict) +
         "' rules out a dense transform: diagonal and permutation-type "
         "factors close under multiplication, so a circuit built from them "
         "keeps at most one nonzero per column at any qubit count\n";
}

EquivalenceReport equivalent_up_to_global_phase(const DenseMatrix& u,
                                                const DenseMatrix& v,
                                                const Tolerance& tol) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument(
        "global-phase comparison needs equal dimensions, got " +
        std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
  }
  const std::size_t n = u.dim();

  std::size_t best_r = 0;
  std::size_t best_c = 0;
  double best_mag = -1.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double mag = std::abs(u(r, c));
      if (mag > best_mag) {
        best_mag = mag;
        best_r = r;
        best_c = c;
      }
    }
  }

  EquivalenceReport report;
  // Align at u's strongest entry; if u is all zeros, or v vanishes there,
  // phase alignment has nothing to grab and the raw difference is reported.
  Complex factor{1.0, 0.0};
  if (best_mag > tol.zero_tol && std::abs(v(best_r, best_c)) > tol.zero_tol) {
    double phase = std::arg(u(best_r, best_c) / v(best_r, best_c));
    if (phase <= -kPi) phase += kTwoPi;
    report.best_phase = phase;
    factor = std::polar(1.0, phase);
  }

  double residual = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      residual = std::max(residual, std::abs(u(r, c) - factor * v(r, c)));
    }
  }
  report.residual = residual;
  report.equal_up_to_global_phase = residual <= tol.abs_tol;
  return report;
}

ComplexityAudit complexity_audit(const GateSetConfig& config, int n_min,
                                 int n_max) {
  if (n_min < 1 || n_min > n_max) {
    throw std::invalid_argument("complexity_audit needs 1 <= n_min <= n_max");
  }
  ComplexityAudit audit;
  audit.all_match = true;
  for (int n = n_min; n <= n_max; ++n) {
    const RecursiveCircuit c = build_recursive_circuit(config, n, true);
    ComplexityAudit::Row row;
    row.n_qubits = n;
    row.counts = gate_count(c);
    row.matches_formula = row.counts.singles == n &&
                          row.counts.twos == n * (n - 1) / 2 &&
                          row.counts.swaps == n / 2;
    audit.all_match = audit.all_match && row.matches_formula;
    audit.rows.push_back(row);
  }
  return audit;
}

NormReport norm_report(const DenseMatrix& m) {
  const std::size_t n = m.dim();
  NormReport report;
  double sum_sq = 0.0;
  std::vector<double> col_sum(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    double row_sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      const double mag = std::abs(m(r, c));
      report.entrywise_l1 += mag;
      row_sum += mag;
      col_sum[c] += mag;
      sum_sq += mag * mag;
    }
    report.max_row_sum = std::max(report.max_row_sum, row_sum);
  }
  for (double s : col_sum) {
    report.max_column_sum = std::max(report.max_column_sum, s);
  }
  report.frobenius = std::sqrt(sum_sq);
  return report;
}

namespace {

using Clock = std::chrono::steady_clock;

// Median of per-operation wall times; every sample repeats the work enough
// to outlast timer noise.
double median_seconds(int trials, const std::function<void()>& work) {
  const auto t0 = Clock::now();
  work();
  const double once =
      std::chrono::duration<double>(Clock::now() - t0).count();
  int reps = 1;
  if (once < 2e-3) {
    reps = static_cast<int>(std::min(1e6, std::ceil(2e-3 / std::max(once, 1e-9))));
  }

  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    for (int r = 0; r < reps; ++r) work();
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    samples.push_back(elapsed / reps);
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return 0.5 * (samples[mid - 1] + samples[mid]);
}

}  // namespace

BenchReport bench_apply(const GateSetConfig& config, int n_qubits, int trials,
                        int cap) {
  if (trials < 1) {
    throw std::invalid_argument("bench_apply needs at least 1 trial");
  }
  if (n_qubits < 1) {
    throw std::invalid_argument("bench_apply needs at least 1 qubit");
  }

  const RecursiveCircuit circuit =
      build_recursive_circuit(config, n_qubits, false);
  const DenseMatrix dense = realize_unitary(circuit, cap);
  const StateVector input = random_state(n_qubits, 20250819);

  BenchReport report;
  report.n_qubits = n_qubits;
  report.trials = trials;
  report.agreement_max_abs_diff =
      max_abs_diff(apply_circuit(circuit, input), apply_to_vector(dense, input));

  // The sink keeps the optimizer from deleting the timed work.
  static volatile double sink = 0.0;

  report.streamed_median_seconds = median_seconds(trials, [&] {
    const StateVector out = apply_circuit(circuit, input);
    sink = sink + out[0].real();
  });
  report.dense_median_seconds = median_seconds(trials, [&] {
    const StateVector out = apply_to_vector(dense, input);
    sink = sink + out[0].real();
  });

  report.has_fft = config == qft_gateset();
  if (report.has_fft) {
    const Signal signal = input.amplitudes();
    const DftConvention conv{FourierSign::kPositive, FourierNorm::kUnitary};
    report.fft_median_seconds = median_seconds(trials, [&] {
      const Signal out = fft_radix2(signal, conv);
      sink = sink + out[0].real();
    });
  }
  return report;
}

}  // namespace qsynth
