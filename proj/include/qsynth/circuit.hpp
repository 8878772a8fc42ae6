// Recursive ladder circuits: building from a gate-set config, streaming
// application to state vectors, dense realization, and gate accounting.
//
// An n-qubit ladder is n blocks. The block with top qubit q applies the
// single-qubit generator to q and then the two-qubit generator with target q
// and control r for every r = q+1 ... n in ascending order. Blocks run in
// order q = 1 ... n, optionally followed by bit-reversal swaps.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qsynth/gates.hpp"
#include "qsynth/numerics.hpp"

namespace qsynth {

/// Dense realization cap. 2^12 x 2^12 complex entries is ~268 MB; streaming
/// application is unaffected by this limit.
inline constexpr int kDefaultRealizeCap = 12;

/// Thrown when a request exceeds a resource cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One placed gate. control == 0 marks a single-qubit placement; the local
/// matrix of a two-qubit placement is ordered control = high bit.
struct GatePlacement {
  int target;
  int control;
  DenseMatrix local;

  bool is_two() const { return control != 0; }
};

/// The stage V acting on qubits top_qubit ... n: one single-qubit placement
/// followed by the traversal two-qubit placements.
struct LadderBlock {
  int top_qubit;
  std::vector<GatePlacement> placements;
};

struct GateCounts {
  int singles = 0;
  int twos = 0;
  int swaps = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct RecursiveCircuit {
  int n_qubits = 0;
  std::vector<LadderBlock> blocks;
  std::vector<std::pair<int, int>> swaps;  // trailing bit-reversal swaps
};

/// Build the n-qubit ladder for the config; angle schedules are evaluated per
/// placement with target = block's top qubit, control = the traversed qubit.
/// With bit_reversal set, swaps exchanging qubit q with qubit n+1-q are
/// appended.
RecursiveCircuit build_recursive_circuit(const GateSetConfig& config,
                                         int n_qubits, bool bit_reversal);

/// Apply by streaming each 2x2/4x4 gate over the amplitudes; no 2^n x 2^n
/// matrix is formed.
StateVector apply_circuit(const RecursiveCircuit& circuit,
                          const StateVector& v);

/// Dense unitary, column k = circuit applied to basis state k.
DenseMatrix realize_unitary(const RecursiveCircuit& circuit,
                            int cap = kDefaultRealizeCap);

/// Counts actual placements (not the closed formula).
GateCounts gate_count(const RecursiveCircuit& circuit);

/// Residual of the ladder recursion at size n: realizes the n-qubit circuit
/// and compares it against (I (x) U') V, where V is the first block extended
/// by identity and U' is the (n-1)-qubit circuit formed by the remaining
/// blocks shifted up one qubit (keeping their realized gate matrices, so the
/// identity holds for every angle schedule; for shift-invariant schedules U'
/// equals the standalone (n-1)-qubit build). Returns the max abs diff.
double check_recursion_identity(const GateSetConfig& config, int n_qubits,
                                int cap = kDefaultRealizeCap);

}  // namespace qsynth
