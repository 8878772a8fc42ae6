#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qsynth/gates.hpp"
#include "qsynth/numerics.hpp"
#include "test_support.hpp"

using namespace qsynth;
using qtest::f2_matrix;
using qtest::load_config;
using qtest::read_file;
using qtest::study_config_names;
using qtest::unitarity_defect;

namespace {

DenseMatrix scaled(const DenseMatrix& m, Complex s) {
  DenseMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = s * m(r, c);
  }
  return out;
}

DenseMatrix added(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  }
  return out;
}

// Generic Taylor-series oracle for exp(G); it knows nothing about Pauli
// algebra, so it independently checks the closed-form construction.
DenseMatrix series_exponential(const DenseMatrix& generator, int terms) {
  DenseMatrix sum = DenseMatrix::identity(generator.dim());
  DenseMatrix term = DenseMatrix::identity(generator.dim());
  for (int k = 1; k <= terms; ++k) {
    term = scaled(mat_mul(term, generator), Complex{1.0 / k, 0.0});
    sum = added(sum, term);
  }
  return sum;
}

DenseMatrix pauli_pair(Pauli p, Pauli q) {
  return mat_tensor(pauli_matrix(p), pauli_matrix(q));
}

}  // namespace

TEST_CASE("phase gates") {
  const DenseMatrix z = make_phase_gate(1);
  CHECK(std::abs(z(0, 0) - Complex{1.0, 0.0}) == 0.0);
  CHECK(std::abs(z(1, 1) - Complex{-1.0, 0.0}) < 1e-15);
  CHECK(z(0, 1) == Complex{0.0, 0.0});

  const DenseMatrix s = make_phase_gate(2);
  CHECK(std::abs(s(1, 1) - Complex{0.0, 1.0}) < 1e-15);

  CHECK(max_abs_diff(make_phase_gate(3),
                     make_named_single(SingleFactor::Kind::kTGate)) == 0.0);

  CHECK_THROWS_AS(make_phase_gate(0), std::invalid_argument);
  CHECK_THROWS_AS(make_phase_gate(-2), std::invalid_argument);
}

TEST_CASE("named single-qubit gates") {
  const DenseMatrix h = make_named_single(SingleFactor::Kind::kHadamard);
  CHECK(max_abs_diff(h, f2_matrix()) == 0.0);
  CHECK(max_abs_diff(mat_mul(h, h), DenseMatrix::identity(2)) < 1e-15);

  const DenseMatrix x = make_named_single(SingleFactor::Kind::kPauliX);
  CHECK(x(0, 1) == Complex{1.0, 0.0});
  CHECK(x(1, 0) == Complex{1.0, 0.0});
  CHECK(x(0, 0) == Complex{0.0, 0.0});

  CHECK_THROWS_AS(make_named_single(SingleFactor::Kind::kPhase),
                  std::invalid_argument);
}

TEST_CASE("single-gate products apply leftmost first") {
  // "H * X" means H acts first, so the matrix is X * H: H with its rows
  // swapped.
  SingleGateExpr expr;
  expr.factors = {SingleFactor{SingleFactor::Kind::kHadamard, 0},
                  SingleFactor{SingleFactor::Kind::kPauliX, 0}};
  const DenseMatrix m = realize_single_gate(expr);
  DenseMatrix expected(2);
  expected(0, 0) = Complex{kInvSqrt2, 0.0};
  expected(0, 1) = Complex{-kInvSqrt2, 0.0};
  expected(1, 0) = Complex{kInvSqrt2, 0.0};
  expected(1, 1) = Complex{kInvSqrt2, 0.0};
  CHECK(max_abs_diff(m, expected) == 0.0);
}

TEST_CASE("pauli matrices") {
  const DenseMatrix y = pauli_matrix(Pauli::kY);
  CHECK(y(0, 1) == Complex{0.0, -1.0});
  CHECK(y(1, 0) == Complex{0.0, 1.0});
  const DenseMatrix z = pauli_matrix(Pauli::kZ);
  CHECK(z(0, 0) == Complex{1.0, 0.0});
  CHECK(z(1, 1) == Complex{-1.0, 0.0});
}

TEST_CASE("pauli exponential closed form") {
  CHECK(max_abs_diff(make_pauli_exponential(Pauli::kX, Pauli::kX, 0.0),
                     DenseMatrix::identity(4)) == 0.0);

  // theta = pi/2: cos term vanishes, leaving i * (Z (x) Z).
  const DenseMatrix half_turn =
      make_pauli_exponential(Pauli::kZ, Pauli::kZ, kPi / 2.0);
  DenseMatrix expected(4);
  expected(0, 0) = Complex{0.0, 1.0};
  expected(1, 1) = Complex{0.0, -1.0};
  expected(2, 2) = Complex{0.0, -1.0};
  expected(3, 3) = Complex{0.0, 1.0};
  CHECK(max_abs_diff(half_turn, expected) < 1e-15);

  const double theta = 0.37;
  const DenseMatrix oracle = series_exponential(
      scaled(pauli_pair(Pauli::kX, Pauli::kY), Complex{0.0, theta}), 30);
  CHECK(max_abs_diff(make_pauli_exponential(Pauli::kX, Pauli::kY, theta),
                     oracle) < 1e-12);
}

TEST_CASE("pauli exponential inverts with the opposite angle") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> angles(-kPi, kPi);
  std::uniform_int_distribution<int> axis(0, 2);
  for (int t = 0; t < 20; ++t) {
    const auto p = static_cast<Pauli>(axis(rng));
    const auto q = static_cast<Pauli>(axis(rng));
    const double theta = angles(rng);
    const DenseMatrix product =
        mat_mul(make_pauli_exponential(p, q, theta),
                make_pauli_exponential(p, q, -theta));
    CHECK(max_abs_diff(product, DenseMatrix::identity(4)) < 1e-12);
  }
}

TEST_CASE("angle schedules evaluate per placement") {
  AngleSchedule by_control;
  by_control.coefficient = make_rational(2, 1);
  by_control.divisor = AngleSchedule::Divisor::kControlIndex;
  CHECK(by_control.evaluate(1, 2) == doctest::Approx(kTwoPi / 4.0));
  CHECK(by_control.evaluate(5, 3) == doctest::Approx(kTwoPi / 8.0));

  AngleSchedule by_target = by_control;
  by_target.divisor = AngleSchedule::Divisor::kTargetIndex;
  CHECK(by_target.evaluate(3, 9) == doctest::Approx(kTwoPi / 8.0));

  AngleSchedule by_distance = by_control;
  by_distance.divisor = AngleSchedule::Divisor::kDistance;
  // d = control - target + 1
  CHECK(by_distance.evaluate(1, 2) == doctest::Approx(kTwoPi / 4.0));
  CHECK(by_distance.evaluate(2, 5) == doctest::Approx(kTwoPi / 16.0));
  CHECK_THROWS_AS(by_distance.evaluate(3, 1), std::domain_error);

  AngleSchedule fixed;
  fixed.coefficient = make_rational(-3, 4);
  fixed.divisor = AngleSchedule::Divisor::kConstant;
  fixed.constant = 2;
  CHECK(fixed.evaluate(7, 8) == doctest::Approx(-0.75 * kPi / 4.0));
}

TEST_CASE("controlled gates in the local two-qubit basis") {
  TwoGateExpr cx;
  cx.factors = {TwoFactor{TwoFactor::Kind::kControlledX}};
  const DenseMatrix m = realize_two_gate(cx, 1, 2);
  DenseMatrix expected(4);
  expected(0, 0) = expected(1, 1) = Complex{1.0, 0.0};
  expected(2, 3) = expected(3, 2) = Complex{1.0, 0.0};
  CHECK(max_abs_diff(m, expected) == 0.0);

  // CP(2*pi/2^j) at control j = 2 phases only |11> by e^{i pi/2} = i.
  const GateSetConfig cfg =
      parse_gateset_config("single: H\ntwo: CP(2*pi/2^j)");
  const DenseMatrix cp = realize_two_gate(cfg.two, 1, 2);
  CHECK(std::abs(cp(3, 3) - Complex{0.0, 1.0}) < 1e-15);
  CHECK(cp(0, 0) == Complex{1.0, 0.0});
  CHECK(cp(2, 2) == Complex{1.0, 0.0});
  CHECK(cp(2, 3) == Complex{0.0, 0.0});
}

TEST_CASE("two-gate products apply leftmost first") {
  const GateSetConfig cfg =
      parse_gateset_config("single: H\ntwo: CX * CP(1*pi)");
  TwoGateExpr cx_only;
  cx_only.factors = {cfg.two.factors[0]};
  TwoGateExpr cp_only;
  cp_only.factors = {cfg.two.factors[1]};
  const DenseMatrix expected = mat_mul(realize_two_gate(cp_only, 1, 2),
                                       realize_two_gate(cx_only, 1, 2));
  CHECK(max_abs_diff(realize_two_gate(cfg.two, 1, 2), expected) == 0.0);
}

TEST_CASE("commuting two-axis coupling matches the summed exponent") {
  const GateSetConfig cfg = load_config("h_ising_xxzz.gs");
  const int target = 1;
  const int control = 3;
  const double theta = kPi / 8.0;  // j = 3
  const DenseMatrix generator = scaled(
      added(pauli_pair(Pauli::kX, Pauli::kX), pauli_pair(Pauli::kZ, Pauli::kZ)),
      Complex{0.0, theta});
  const DenseMatrix oracle = series_exponential(generator, 30);
  CHECK(max_abs_diff(realize_two_gate(cfg.two, target, control), oracle) <
        1e-12);
}

TEST_CASE("parser recognizes the studied gate sets") {
  const GateSetConfig mixed =
      parse_gateset_config("single: H\ntwo: CX * CP(2*pi/2^j)");
  REQUIRE(mixed.single.factors.size() == 1);
  CHECK(mixed.single.factors[0].kind == SingleFactor::Kind::kHadamard);
  REQUIRE(mixed.two.factors.size() == 2);
  CHECK(mixed.two.factors[0].kind == TwoFactor::Kind::kControlledX);
  CHECK(mixed.two.factors[1].kind == TwoFactor::Kind::kControlledPhase);
  CHECK(mixed.two.factors[1].angle.coefficient == make_rational(2, 1));
  CHECK(mixed.two.factors[1].angle.divisor ==
        AngleSchedule::Divisor::kControlIndex);
  CHECK(mixed == load_config("h_cxcp.gs"));

  const GateSetConfig ising =
      parse_gateset_config("single: T\ntwo: EXP(ZZ, -1*pi/2^j)");
  REQUIRE(ising.two.factors.size() == 1);
  CHECK(ising.two.factors[0].kind == TwoFactor::Kind::kPauliExponential);
  CHECK(ising.two.factors[0].control_pauli == Pauli::kZ);
  CHECK(ising.two.factors[0].target_pauli == Pauli::kZ);
  CHECK(ising.two.factors[0].angle.coefficient == make_rational(-1, 1));
  CHECK(ising == load_config("t_ising_zz.gs"));

  const GateSetConfig qft = parse_gateset_config("single: H\ntwo: CP(2*pi/2^d)");
  CHECK(qft.two.factors[0].angle.divisor == AngleSchedule::Divisor::kDistance);
  CHECK(qft == qft_gateset());
  CHECK(qft == load_config("qft.gs"));
}

TEST_CASE("parser handles rationals, constants, comments, CRLF") {
  const GateSetConfig cfg = parse_gateset_config(
      "# comment line\r\n"
      "single: R(2) * H   # trailing comment\r\n"
      "\r\n"
      "two: CP(3/4*pi/2^i) * CP(-1*pi) * CP(1*pi/2^3)\r\n");
  REQUIRE(cfg.single.factors.size() == 2);
  CHECK(cfg.single.factors[0].kind == SingleFactor::Kind::kPhase);
  CHECK(cfg.single.factors[0].phase_k == 2);
  REQUIRE(cfg.two.factors.size() == 3);
  CHECK(cfg.two.factors[0].angle.coefficient == make_rational(3, 4));
  CHECK(cfg.two.factors[0].angle.divisor ==
        AngleSchedule::Divisor::kTargetIndex);
  CHECK(cfg.two.factors[1].angle.coefficient == make_rational(-1, 1));
  CHECK(cfg.two.factors[1].angle.divisor == AngleSchedule::Divisor::kConstant);
  CHECK(cfg.two.factors[1].angle.constant == 0);
  CHECK(cfg.two.factors[2].angle.divisor == AngleSchedule::Divisor::kConstant);
  CHECK(cfg.two.factors[2].angle.constant == 3);
}

TEST_CASE("parse errors carry location") {
  CHECK_THROWS_AS(parse_gateset_config("single: Q\ntwo: CX"), ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single: H"), ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single: H\ntwo: CX\nsingle: T"),
                  ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single:\ntwo: CX"), ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single: H\ntwo: CX CX"), ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single: H\ntwo: CP(2*pi/2^k)"),
                  ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single: H\ntwo: CP(2/0*pi)"),
                  ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single: R(0)\ntwo: CX"), ParseError);
  CHECK_THROWS_AS(parse_gateset_config("single: H\ntwo: EXP(XQ, 1*pi)"),
                  ParseError);

  try {
    parse_gateset_config("single: H\ntwo: CP(2*pi/2^k)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("render round-trips every shipped config") {
  for (const std::string& name : study_config_names()) {
    const GateSetConfig cfg = load_config(name);
    const std::string rendered = render_gateset_config(cfg);
    CHECK(parse_gateset_config(rendered) == cfg);
    // Canonical form is a fixed point.
    CHECK(render_gateset_config(parse_gateset_config(rendered)) == rendered);
  }
  const GateSetConfig qft = load_config("qft.gs");
  CHECK(parse_gateset_config(render_gateset_config(qft)) == qft);
}

TEST_CASE("every realized gate matrix is unitary") {
  std::vector<std::string> names = study_config_names();
  names.push_back("qft.gs");
  for (const std::string& name : names) {
    const GateSetConfig cfg = load_config(name);
    CHECK(unitarity_defect(realize_single_gate(cfg.single)) < 1e-12);
    CHECK(unitarity_defect(realize_two_gate(cfg.two, 1, 2)) < 1e-12);
    CHECK(unitarity_defect(realize_two_gate(cfg.two, 3, 7)) < 1e-12);
  }
}

TEST_CASE("CP stays diagonal and CX is a strict permutation") {
  const GateSetConfig qft = qft_gateset();
  const DenseMatrix cp = realize_two_gate(qft.two, 2, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (r != c) CHECK(cp(r, c) == Complex{0.0, 0.0});
    }
  }

  TwoGateExpr cx;
  cx.factors = {TwoFactor{TwoFactor::Kind::kControlledX}};
  const DenseMatrix m = realize_two_gate(cx, 1, 2);
  for (std::size_t r = 0; r < 4; ++r) {
    int row_hits = 0;
    int col_hits = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      if (std::abs(m(r, c)) > 1e-12) {
        ++row_hits;
        CHECK(std::abs(m(r, c)) == doctest::Approx(1.0));
      }
      if (std::abs(m(c, r)) > 1e-12) ++col_hits;
    }
    CHECK(row_hits == 1);
    CHECK(col_hits == 1);
  }
}
