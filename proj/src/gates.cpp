#include "qsynth/gates.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>

namespace qsynth {

namespace {

DenseMatrix identity2() { return DenseMatrix::identity(2); }

DenseMatrix matrix2(Complex a, Complex b, Complex c, Complex d) {
  return DenseMatrix(2, {a, b, c, d});
}

}  // namespace

DenseMatrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::kX:
      return matrix2({0, 0}, {1, 0}, {1, 0}, {0, 0});
    case Pauli::kY:
      return matrix2({0, 0}, {0, -1}, {0, 1}, {0, 0});
    case Pauli::kZ:
      return matrix2({1, 0}, {0, 0}, {0, 0}, {-1, 0});
  }
  throw std::invalid_argument("pauli_matrix: unknown axis");
}

Rational make_rational(long long num, long long den) {
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

double AngleSchedule::evaluate(int target, int control) const {
  int exponent = 0;
  switch (divisor) {
    case Divisor::kControlIndex:
      exponent = control;
      break;
    case Divisor::kTargetIndex:
      exponent = target;
      break;
    case Divisor::kDistance:
      exponent = control - target + 1;
      break;
    case Divisor::kConstant:
      exponent = constant;
      break;
  }
  if (exponent < 0) {
    throw std::domain_error("AngleSchedule: divisor exponent is negative at "
                            "target " + std::to_string(target) + ", control " +
                            std::to_string(control));
  }
  return std::ldexp(coefficient.value() * kPi, -exponent);
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

DenseMatrix make_phase_gate(int k) {
  if (k < 1) {
    throw std::invalid_argument("make_phase_gate: k must be >= 1");
  }
  return matrix2({1, 0}, {0, 0}, {0, 0}, std::polar(1.0, std::ldexp(kTwoPi, -k)));
}

DenseMatrix make_named_single(SingleFactor::Kind kind) {
  switch (kind) {
    case SingleFactor::Kind::kHadamard:
      return matrix2({kInvSqrt2, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0},
                     {-kInvSqrt2, 0});
    case SingleFactor::Kind::kPauliX:
      return pauli_matrix(Pauli::kX);
    case SingleFactor::Kind::kTGate:
      return make_phase_gate(3);
    case SingleFactor::Kind::kPhase:
      break;
  }
  throw std::invalid_argument("make_named_single: token is not H, X or T");
}

DenseMatrix make_pauli_exponential(Pauli p, Pauli q, double theta) {
  const DenseMatrix pq = mat_tensor(pauli_matrix(p), pauli_matrix(q));
  const double c = std::cos(theta);
  const Complex is{0.0, std::sin(theta)};
  DenseMatrix out(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t col = 0; col < 4; ++col) {
      out(r, col) = is * pq(r, col);
    }
    out(r, r) += c;
  }
  return out;
}

DenseMatrix realize_single_gate(const SingleGateExpr& expr) {
  if (expr.factors.empty()) {
    throw std::invalid_argument("realize_single_gate: empty expression");
  }
  DenseMatrix out = identity2();
  for (const SingleFactor& f : expr.factors) {
    const DenseMatrix m = f.kind == SingleFactor::Kind::kPhase
                              ? make_phase_gate(f.phase_k)
                              : make_named_single(f.kind);
    out = mat_mul(m, out);  // leftmost factor acts first
  }
  return out;
}

DenseMatrix realize_two_gate(const TwoGateExpr& expr, int target, int control) {
  if (expr.factors.empty()) {
    throw std::invalid_argument("realize_two_gate: empty expression");
  }
  if (target == control) {
    throw std::invalid_argument("realize_two_gate: target equals control");
  }
  DenseMatrix out = DenseMatrix::identity(4);
  for (const TwoFactor& f : expr.factors) {
    DenseMatrix m(4);
    switch (f.kind) {
      case TwoFactor::Kind::kControlledX:
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = Complex{1.0, 0.0};
        break;
      case TwoFactor::Kind::kControlledPhase:
        m(0, 0) = m(1, 1) = m(2, 2) = Complex{1.0, 0.0};
        m(3, 3) = std::polar(1.0, f.angle.evaluate(target, control));
        break;
      case TwoFactor::Kind::kPauliExponential:
        m = make_pauli_exponential(f.control_pauli, f.target_pauli,
                                   f.angle.evaluate(target, control));
        break;
    }
    out = mat_mul(m, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

namespace {

// Single-line cursor with 1-based error positions.
class LineCursor {
 public:
  LineCursor(std::string_view text, int line_no)
      : text_(text), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) {
      fail(std::string("expected '") + c + "' " + what);
    }
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected a name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected an integer");
    }
    long long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1'000'000'000) {
        fail("integer too large");
      }
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, static_cast<int>(pos_) + 1);
  }

  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  int line_no_;
  std::size_t pos_ = 0;
};

std::optional<Pauli> pauli_from_letter(char c) {
  switch (c) {
    case 'X': return Pauli::kX;
    case 'Y': return Pauli::kY;
    case 'Z': return Pauli::kZ;
    default: return std::nullopt;
  }
}

AngleSchedule parse_angle(LineCursor& cur) {
  AngleSchedule angle;
  long long sign = 1;
  if (cur.consume('-')) {
    sign = -1;
  } else {
    cur.consume('+');
  }
  const long long num = cur.integer();
  long long den = 1;
  if (cur.peek() == '/') {
    // Either the rational's denominator or the "/2^" divisor; the divisor
    // starts with "2^", so look ahead for the caret.
    LineCursor probe = cur;
    probe.consume('/');
    if (std::isdigit(static_cast<unsigned char>(probe.peek()))) {
      const long long value = probe.integer();
      if (probe.peek() != '^') {
        cur = probe;
        den = value;
        if (den == 0) {
          cur.fail("zero denominator in angle coefficient");
        }
      }
    }
  }
  angle.coefficient = make_rational(sign * num, den);
  cur.expect('*', "after the angle coefficient");
  if (cur.ident() != "pi") {
    cur.fail("expected 'pi'");
  }
  if (cur.consume('/')) {
    if (cur.integer() != 2) {
      cur.fail("divisor must be a power of two, written 2^SYM");
    }
    cur.expect('^', "in the 2^SYM divisor");
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const long long constant = cur.integer();
      angle.divisor = AngleSchedule::Divisor::kConstant;
      angle.constant = static_cast<int>(constant);
    } else {
      const std::string sym = cur.ident();
      if (sym == "i") {
        angle.divisor = AngleSchedule::Divisor::kTargetIndex;
      } else if (sym == "j") {
        angle.divisor = AngleSchedule::Divisor::kControlIndex;
      } else if (sym == "d") {
        angle.divisor = AngleSchedule::Divisor::kDistance;
      } else {
        cur.fail("unknown divisor symbol '" + sym + "' (want i, j, d or an integer)");
      }
    }
  } else {
    angle.divisor = AngleSchedule::Divisor::kConstant;
    angle.constant = 0;
  }
  return angle;
}

SingleFactor parse_single_factor(LineCursor& cur) {
  const std::string name = cur.ident();
  if (name == "H") {
    return SingleFactor{SingleFactor::Kind::kHadamard, 0};
  }
  if (name == "X") {
    return SingleFactor{SingleFactor::Kind::kPauliX, 0};
  }
  if (name == "T") {
    return SingleFactor{SingleFactor::Kind::kTGate, 0};
  }
  if (name == "R") {
    cur.expect('(', "after R");
    const long long k = cur.integer();
    if (k < 1) {
      cur.fail("R(k) requires k >= 1");
    }
    cur.expect(')', "after the R(k) argument");
    return SingleFactor{SingleFactor::Kind::kPhase, static_cast<int>(k)};
  }
  cur.fail("unknown single-qubit gate token '" + name + "'");
}

TwoFactor parse_two_factor(LineCursor& cur) {
  const std::string name = cur.ident();
  if (name == "CX") {
    return TwoFactor{TwoFactor::Kind::kControlledX};
  }
  if (name == "CP") {
    cur.expect('(', "after CP");
    TwoFactor f{TwoFactor::Kind::kControlledPhase};
    f.angle = parse_angle(cur);
    cur.expect(')', "after the CP angle");
    return f;
  }
  if (name == "EXP") {
    cur.expect('(', "after EXP");
    const std::string pp = cur.ident();
    TwoFactor f{TwoFactor::Kind::kPauliExponential};
    const auto first = pp.size() == 2 ? pauli_from_letter(pp[0]) : std::nullopt;
    const auto second = pp.size() == 2 ? pauli_from_letter(pp[1]) : std::nullopt;
    if (!first || !second) {
      cur.fail("EXP expects two Pauli letters from {X, Y, Z}, got '" + pp + "'");
    }
    f.control_pauli = *first;
    f.target_pauli = *second;
    cur.expect(',', "between the Pauli pair and the angle");
    f.angle = parse_angle(cur);
    cur.expect(')', "after the EXP angle");
    return f;
  }
  cur.fail("unknown two-qubit gate token '" + name + "'");
}

template <typename Factor, typename ParseFactor>
std::vector<Factor> parse_product(LineCursor& cur, ParseFactor&& parse_factor) {
  std::vector<Factor> factors;
  if (cur.at_end()) {
    cur.fail("empty gate expression");
  }
  factors.push_back(parse_factor(cur));
  while (!cur.at_end()) {
    cur.expect('*', "between gate factors");
    factors.push_back(parse_factor(cur));
  }
  return factors;
}

std::string strip_comment(std::string_view line) {
  const std::size_t hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') {
      return false;
    }
  }
  return true;
}

}  // namespace

GateSetConfig parse_gateset_config(std::string_view text) {
  struct Logical {
    std::string body;
    int line_no;
  };
  std::vector<Logical> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_no;
    std::string body = strip_comment(raw);
    if (!body.empty() && body.back() == '\r') {
      body.pop_back();
    }
    if (!is_blank(body)) {
      lines.push_back(Logical{std::move(body), line_no});
    }
    if (nl == std::string_view::npos) {
      break;
    }
    start = nl + 1;
  }
  if (lines.size() < 2) {
    throw ParseError("config needs a 'single:' line and a 'two:' line",
                     line_no, 1);
  }
  if (lines.size() > 2) {
    throw ParseError("unexpected content after the 'two:' line",
                     lines[2].line_no, 1);
  }

  auto expect_prefix = [](Logical& logical, std::string_view key) -> LineCursor {
    LineCursor cur(logical.body, logical.line_no);
    if (cur.ident() != key) {
      cur.fail("expected '" + std::string(key) + ":'");
    }
    cur.expect(':', "after the section name");
    return cur;
  };

  GateSetConfig config;
  {
    LineCursor cur = expect_prefix(lines[0], "single");
    config.single.factors =
        parse_product<SingleFactor>(cur, parse_single_factor);
  }
  {
    LineCursor cur = expect_prefix(lines[1], "two");
    config.two.factors = parse_product<TwoFactor>(cur, parse_two_factor);
  }
  return config;
}

namespace {

std::string render_angle(const AngleSchedule& angle) {
  std::string out = std::to_string(angle.coefficient.num);
  if (angle.coefficient.den != 1) {
    out += "/" + std::to_string(angle.coefficient.den);
  }
  out += "*pi";
  switch (angle.divisor) {
    case AngleSchedule::Divisor::kControlIndex:
      out += "/2^j";
      break;
    case AngleSchedule::Divisor::kTargetIndex:
      out += "/2^i";
      break;
    case AngleSchedule::Divisor::kDistance:
      out += "/2^d";
      break;
    case AngleSchedule::Divisor::kConstant:
      if (angle.constant != 0) {
        out += "/2^" + std::to_string(angle.constant);
      }
      break;
  }
  return out;
}

const char* pauli_letter(Pauli p) {
  switch (p) {
    case Pauli::kX: return "X";
    case Pauli::kY: return "Y";
    case Pauli::kZ: return "Z";
  }
  return "?";
}

}  // namespace

std::string render_gateset_config(const GateSetConfig& config) {
  std::string out = "single:";
  bool first = true;
  for (const SingleFactor& f : config.single.factors) {
    out += first ? " " : " * ";
    first = false;
    switch (f.kind) {
      case SingleFactor::Kind::kHadamard: out += "H"; break;
      case SingleFactor::Kind::kPauliX: out += "X"; break;
      case SingleFactor::Kind::kTGate: out += "T"; break;
      case SingleFactor::Kind::kPhase:
        out += "R(" + std::to_string(f.phase_k) + ")";
        break;
    }
  }
  out += "\ntwo:";
  first = true;
  for (const TwoFactor& f : config.two.factors) {
    out += first ? " " : " * ";
    first = false;
    switch (f.kind) {
      case TwoFactor::Kind::kControlledX:
        out += "CX";
        break;
      case TwoFactor::Kind::kControlledPhase:
        out += "CP(" + render_angle(f.angle) + ")";
        break;
      case TwoFactor::Kind::kPauliExponential:
        out += std::string("EXP(") + pauli_letter(f.control_pauli) +
               pauli_letter(f.target_pauli) + ", " + render_angle(f.angle) + ")";
        break;
    }
  }
  out += "\n";
  return out;
}

GateSetConfig qft_gateset() {
  GateSetConfig config;
  config.single.factors = {SingleFactor{SingleFactor::Kind::kHadamard, 0}};
  TwoFactor cp{TwoFactor::Kind::kControlledPhase};
  cp.angle.coefficient = make_rational(2, 1);
  cp.angle.divisor = AngleSchedule::Divisor::kDistance;
  config.two.factors = {cp};
  return config;
}

}  // namespace qsynth
