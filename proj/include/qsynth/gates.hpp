// Single- and two-qubit generator gates, and the gate-set configuration
// language that fully determines a ladder circuit.
//
// Grammar (line oriented, '#' starts a comment, whitespace ignored):
//
//   file    := "single:" S-expr NEWLINE "two:" T-expr
//   S-expr  := S-token ("*" S-token)*     S-token := "H" | "X" | "T" | "R(" INT ")"
//   T-expr  := T-token ("*" T-token)*     T-token := "CX" | "CP(" angle ")"
//                                                  | "EXP(" PP "," angle ")"
//   PP      := two letters from {X, Y, Z}
//   angle   := [SIGN] RATIONAL "*" "pi" [ "/" "2^" SYM ]
//   SYM     := "i" | "j" | "d" | INT       RATIONAL := INT [ "/" INT ]
//
// Gate products are circuit ordered: the leftmost token acts first, so the
// realized matrix is the product of the factors folded right to left.
// Angle symbols evaluate per placement: j = control index, i = target index,
// d = j - i + 1 (control-target distance plus one), INT = a fixed exponent.
// EXP(PQ, a) realizes exp(i*angle*(P (x) Q)) in the local two-qubit ordering
// (control = high bit), i.e. the first letter sits on the control factor.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsynth/numerics.hpp"

namespace qsynth {

enum class Pauli { kX, kY, kZ };

/// 2x2 Pauli matrix for the given axis.
DenseMatrix pauli_matrix(Pauli p);

/// Reduced fraction; denominator kept positive.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

/// angle(target, control) = coefficient * pi / 2^s, where the exponent s is
/// selected by the divisor symbol. A constant divisor of 0 means a bare
/// "c*pi" angle.
struct AngleSchedule {
  enum class Divisor { kControlIndex, kTargetIndex, kDistance, kConstant };

  Rational coefficient;
  Divisor divisor = Divisor::kConstant;
  int constant = 0;

  /// Throws std::domain_error if the exponent evaluates negative.
  double evaluate(int target, int control) const;

  friend bool operator==(const AngleSchedule&, const AngleSchedule&) = default;
};

struct SingleFactor {
  enum class Kind { kHadamard, kPauliX, kTGate, kPhase };

  Kind kind = Kind::kHadamard;
  int phase_k = 0;  // R(k) exponent, meaningful for kPhase only

  friend bool operator==(const SingleFactor&, const SingleFactor&) = default;
};

struct TwoFactor {
  enum class Kind { kControlledX, kControlledPhase, kPauliExponential };

  Kind kind = Kind::kControlledX;
  AngleSchedule angle{};              // kControlledPhase / kPauliExponential
  Pauli control_pauli = Pauli::kX;    // kPauliExponential: high (control) factor
  Pauli target_pauli = Pauli::kX;     // kPauliExponential: low (target) factor

  friend bool operator==(const TwoFactor&, const TwoFactor&) = default;
};

struct SingleGateExpr {
  std::vector<SingleFactor> factors;

  friend bool operator==(const SingleGateExpr&, const SingleGateExpr&) = default;
};

struct TwoGateExpr {
  std::vector<TwoFactor> factors;

  friend bool operator==(const TwoGateExpr&, const TwoGateExpr&) = default;
};

/// Declarative description of a ladder circuit's generators.
struct GateSetConfig {
  SingleGateExpr single;
  TwoGateExpr two;

  friend bool operator==(const GateSetConfig&, const GateSetConfig&) = default;
};

/// Parse failure with 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// diag(1, e^{2 pi i / 2^k}); throws for k < 1.
DenseMatrix make_phase_gate(int k);

/// H, X or T as a 2x2 matrix; kPhase is rejected (use make_phase_gate).
DenseMatrix make_named_single(SingleFactor::Kind kind);

/// exp(i theta (P (x) Q)) in closed form cos(theta) I + i sin(theta) (P (x) Q),
/// exact because (P (x) Q)^2 = I.
DenseMatrix make_pauli_exponential(Pauli p, Pauli q, double theta);

/// Product of the expression's factors, leftmost acting first.
DenseMatrix realize_single_gate(const SingleGateExpr& expr);

/// 4x4 matrix in local ordering (control = high bit, target = low bit) with
/// the angle schedule evaluated at the given placement indices.
DenseMatrix realize_two_gate(const TwoGateExpr& expr, int target, int control);

GateSetConfig parse_gateset_config(std::string_view text);

/// Canonical text form; parses back to an identical config.
std::string render_gateset_config(const GateSetConfig& config);

/// The exact-QFT gate set: single H, two CP(2*pi/2^d).
GateSetConfig qft_gateset();

}  // namespace qsynth
