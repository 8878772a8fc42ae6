#include "qsynth/circuit.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsynth {

namespace {

// Qubit 1 is the most significant bit of the amplitude index.
std::size_t qubit_bit(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - qubit);
}

void apply_single_inplace(std::vector<Complex>& amps, int n_qubits, int qubit,
                          const DenseMatrix& m) {
  const std::size_t bit = qubit_bit(n_qubits, qubit);
  const std::size_t size = amps.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (i & bit) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | bit];
    amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
    amps[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

// Local basis order: index = 2 * control_bit + target_bit.
void apply_two_inplace(std::vector<Complex>& amps, int n_qubits, int target,
                       int control, const DenseMatrix& m) {
  const std::size_t tbit = qubit_bit(n_qubits, target);
  const std::size_t cbit = qubit_bit(n_qubits, control);
  const std::size_t size = amps.size();
  for (std::size_t i = 0; i < size; ++i) {
    if ((i & tbit) || (i & cbit)) continue;
    const std::size_t idx[4] = {i, i | tbit, i | cbit, i | cbit | tbit};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps[idx[k]];
    for (int row = 0; row < 4; ++row) {
      Complex acc{0.0, 0.0};
      for (int col = 0; col < 4; ++col) acc += m(row, col) * in[col];
      amps[idx[row]] = acc;
    }
  }
}

void apply_swap_inplace(std::vector<Complex>& amps, int n_qubits, int a,
                        int b) {
  const std::size_t abit = qubit_bit(n_qubits, a);
  const std::size_t bbit = qubit_bit(n_qubits, b);
  const std::size_t size = amps.size();
  for (std::size_t i = 0; i < size; ++i) {
    if ((i & abit) && !(i & bbit)) {
      std::swap(amps[i], amps[i ^ abit ^ bbit]);
    }
  }
}

void stream_circuit(const RecursiveCircuit& circuit,
                    std::vector<Complex>& amps) {
  for (const LadderBlock& block : circuit.blocks) {
    for (const GatePlacement& p : block.placements) {
      if (p.is_two()) {
        apply_two_inplace(amps, circuit.n_qubits, p.target, p.control,
                          p.local);
      } else {
        apply_single_inplace(amps, circuit.n_qubits, p.target, p.local);
      }
    }
  }
  for (const auto& [a, b] : circuit.swaps) {
    apply_swap_inplace(amps, circuit.n_qubits, a, b);
  }
}

// The remaining blocks of an n-qubit ladder, relabeled to act on n-1 qubits.
// Gate matrices are kept as placed, so no angles are re-evaluated.
RecursiveCircuit drop_first_block(const RecursiveCircuit& circuit) {
  RecursiveCircuit sub;
  sub.n_qubits = circuit.n_qubits - 1;
  for (std::size_t b = 1; b < circuit.blocks.size(); ++b) {
    const LadderBlock& block = circuit.blocks[b];
    LadderBlock shifted;
    shifted.top_qubit = block.top_qubit - 1;
    for (const GatePlacement& p : block.placements) {
      shifted.placements.push_back(
          {p.target - 1, p.is_two() ? p.control - 1 : 0, p.local});
    }
    sub.blocks.push_back(std::move(shifted));
  }
  return sub;
}

}  // namespace

RecursiveCircuit build_recursive_circuit(const GateSetConfig& config,
                                         int n_qubits, bool bit_reversal) {
  if (n_qubits < 1) {
    throw std::invalid_argument("circuit needs at least 1 qubit, got " +
                                std::to_string(n_qubits));
  }
  RecursiveCircuit circuit;
  circuit.n_qubits = n_qubits;
  for (int q = 1; q <= n_qubits; ++q) {
    LadderBlock block;
    block.top_qubit = q;
    block.placements.push_back({q, 0, realize_single_gate(config.single)});
    for (int r = q + 1; r <= n_qubits; ++r) {
      block.placements.push_back({q, r, realize_two_gate(config.two, q, r)});
    }
    circuit.blocks.push_back(std::move(block));
  }
  if (bit_reversal) {
    for (int q = 1; q < n_qubits + 1 - q; ++q) {
      circuit.swaps.emplace_back(q, n_qubits + 1 - q);
    }
  }
  return circuit;
}

StateVector apply_circuit(const RecursiveCircuit& circuit,
                          const StateVector& v) {
  if (v.n_qubits() != circuit.n_qubits) {
    throw std::invalid_argument(
        "state has " + std::to_string(v.n_qubits()) + " qubits, circuit has " +
        std::to_string(circuit.n_qubits));
  }
  std::vector<Complex> amps = v.amplitudes();
  stream_circuit(circuit, amps);
  return StateVector(circuit.n_qubits, std::move(amps));
}

DenseMatrix realize_unitary(const RecursiveCircuit& circuit, int cap) {
  if (circuit.n_qubits > cap) {
    throw CapExceededError("refusing to realize " +
                           std::to_string(circuit.n_qubits) +
                           "-qubit unitary densely (cap is " +
                           std::to_string(cap) + " qubits)");
  }
  const std::size_t dim = std::size_t{1} << circuit.n_qubits;
  DenseMatrix out(dim);
  std::vector<Complex> amps(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::fill(amps.begin(), amps.end(), Complex{0.0, 0.0});
    amps[col] = Complex{1.0, 0.0};
    stream_circuit(circuit, amps);
    for (std::size_t row = 0; row < dim; ++row) {
      out(row, col) = amps[row];
    }
  }
  return out;
}

GateCounts gate_count(const RecursiveCircuit& circuit) {
  GateCounts counts;
  for (const LadderBlock& block : circuit.blocks) {
    for (const GatePlacement& p : block.placements) {
      if (p.is_two()) {
        ++counts.twos;
      } else {
        ++counts.singles;
      }
    }
  }
  counts.swaps = static_cast<int>(circuit.swaps.size());
  return counts;
}

double check_recursion_identity(const GateSetConfig& config, int n_qubits,
                                int cap) {
  if (n_qubits < 2) {
    throw std::invalid_argument("recursion check needs at least 2 qubits");
  }
  const RecursiveCircuit full =
      build_recursive_circuit(config, n_qubits, false);
  const DenseMatrix whole = realize_unitary(full, cap);

  RecursiveCircuit stage;
  stage.n_qubits = n_qubits;
  stage.blocks.push_back(full.blocks.front());
  const DenseMatrix v = realize_unitary(stage, cap);

  const DenseMatrix sub = realize_unitary(drop_first_block(full), cap);
  const DenseMatrix rhs =
      mat_mul(mat_tensor(DenseMatrix::identity(2), sub), v);
  return max_abs_diff(whole, rhs);
}

}  // namespace qsynth
