// Measurements over realized transforms: sparsity structure, equivalence up
// to global phase, gate-count audits, matrix norms, and desk-scale timing.
// Reports serialize as line-oriented "key = value" text with stable key
// order and 17-significant-digit numerics so golden files diff cleanly.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsynth/circuit.hpp"
#include "qsynth/gates.hpp"
#include "qsynth/numerics.hpp"

namespace qsynth {

enum class SparsityVerdict {
  kDiagonal,
  kGeneralizedPermutation,
  kFullyDense,
  kDense,
  kSparse,
};

std::string to_string(SparsityVerdict verdict);

struct SparsityReport {
  std::size_t dim = 0;
  std::size_t nnz = 0;
  double density = 0.0;
  double min_nonzero_magnitude = 0.0;  // 0 when the matrix has no nonzeros
  double max_magnitude = 0.0;
  SparsityVerdict verdict = SparsityVerdict::kSparse;

  std::string to_text() const;
};

struct EquivalenceReport {
  bool equal_up_to_global_phase = false;
  double best_phase = 0.0;  // in (-pi, pi]
  double residual = 0.0;

  std::string to_text() const;
};

struct ComplexityAudit {
  struct Row {
    int n_qubits = 0;
    GateCounts counts;        // built with bit reversal, so swaps are counted
    bool matches_formula = false;  // singles = n, twos = n(n-1)/2, swaps = n/2
  };
  std::vector<Row> rows;
  bool all_match = false;

  std::string to_text() const;
};

struct NormReport {
  double entrywise_l1 = 0.0;
  double max_column_sum = 0.0;
  double max_row_sum = 0.0;
  double frobenius = 0.0;

  std::string to_text() const;
};

struct BenchReport {
  int n_qubits = 0;
  int trials = 0;
  double streamed_median_seconds = 0.0;
  double dense_median_seconds = 0.0;
  bool has_fft = false;  // set when the config is the standard Fourier set
  double fft_median_seconds = 0.0;
  double agreement_max_abs_diff = 0.0;  // streamed vs. dense matvec output

  std::string to_text() const;
};

/// Counts entries with magnitude above tol.zero_tol and classifies the
/// pattern. Verdict rules apply in order: diagonal (all nonzeros on the
/// diagonal), generalized-permutation (nnz = N, one nonzero per row and
/// column), fully-dense (nnz = N^2), dense (density >= 0.5), else sparse.
SparsityReport sparsity_report(const DenseMatrix& m,
                               const Tolerance& tol = Tolerance{});

/// One line of explanation when the verdict rules out a dense transform;
/// empty string otherwise.
std::string sparsity_discrepancy_note(const SparsityReport& report);

/// Aligns v to u by the phase of their entries at u's largest-magnitude
/// position and reports the residual max |u - e^{i*phase} v|. When v is zero
/// where u is maximal no phase works and the pair is reported non-equivalent.
EquivalenceReport equivalent_up_to_global_phase(const DenseMatrix& u,
                                                const DenseMatrix& v,
                                                const Tolerance& tol =
                                                    Tolerance{});

/// Builds the circuit (with bit reversal) for each n in [n_min, n_max] and
/// compares actual counts against n singles, n(n-1)/2 two-qubit gates and
/// floor(n/2) swaps.
ComplexityAudit complexity_audit(const GateSetConfig& config, int n_min,
                                 int n_max);

NormReport norm_report(const DenseMatrix& m);

/// Median wall time per application over `trials` samples: gate streaming
/// vs. dense matvec (matrix realized once, outside the timing), plus the
/// radix-2 transform when the config is the standard Fourier gate set. Each
/// sample repeats the operation enough times to be readable on a wall clock.
BenchReport bench_apply(const GateSetConfig& config, int n_qubits, int trials,
                        int cap = kDefaultRealizeCap);

}  // namespace qsynth
