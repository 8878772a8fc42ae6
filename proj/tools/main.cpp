// Command-line workbench: synthesize ladder-circuit unitaries, render them
// as heatmaps, analyze sparsity/norms, run built-in identity checks, FFT
// signal files, and benchmark application paths.
//
// Exit codes: 0 success or check verified, 1 check failed, 2 input error,
// 3 resource cap exceeded.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qsynth/analysis.hpp"
#include "qsynth/circuit.hpp"
#include "qsynth/gates.hpp"
#include "qsynth/matrix_io.hpp"
#include "qsynth/numerics.hpp"
#include "qsynth/pgm.hpp"
#include "qsynth/transforms.hpp"

namespace {

using namespace qsynth;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

// Dense verification at size N needs an N x N matrix; 4096 matches the
// 12-qubit realization cap.
constexpr std::size_t kDenseSizeCap = 4096;

GateSetConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_gateset_config(buffer.str());
}

Signal random_signal(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Signal s(size);
  for (Complex& z : s) z = Complex{dist(rng), dist(rng)};
  return s;
}

Signal dense_transform(const DenseMatrix& m, const Signal& s) {
  const std::size_t n = m.dim();
  Signal out(n, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out[r] += m(r, c) * s[c];
    }
  }
  return out;
}

double max_abs_diff_signal(const Signal& a, const Signal& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

int run_synth(const std::string& config_path, int n_qubits, bool bit_reversal,
              const std::string& out_path) {
  const GateSetConfig config = load_config(config_path);
  const RecursiveCircuit circuit =
      build_recursive_circuit(config, n_qubits, bit_reversal);
  write_matrix_file(out_path, realize_unitary(circuit));
  return kExitOk;
}

int run_render(const std::string& in_path, const std::string& part_name,
               const std::string& out_path) {
  const DenseMatrix m = read_matrix_file(in_path);
  write_heatmap_pgm_file(out_path, m, parse_matrix_part(part_name));
  return kExitOk;
}

int run_analyze(const std::string& in_path, double zero_tol) {
  if (zero_tol < 0.0 || !std::isfinite(zero_tol)) {
    throw std::invalid_argument("--zero-tol must be a finite value >= 0");
  }
  const DenseMatrix m = read_matrix_file(in_path);
  Tolerance tol;
  tol.zero_tol = zero_tol;
  const SparsityReport sparsity = sparsity_report(m, tol);
  std::cout << sparsity.to_text();
  std::cout << sparsity_discrepancy_note(sparsity);
  std::cout << norm_report(m).to_text();
  return kExitOk;
}

int finish_check(const std::string& target, const std::string& size_key,
                 long long size_value, double residual, double tolerance) {
  std::cout << "target = " << target << "\n";
  std::cout << size_key << " = " << size_value << "\n";
  std::cout << "residual = " << format_17g(residual) << "\n";
  std::cout << "tolerance = " << format_17g(tolerance) << "\n";
  const bool pass = residual <= tolerance;
  std::cout << "result = " << (pass ? "pass" : "fail") << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int run_verify(const std::string& target, int n_qubits, std::size_t size,
               const std::string& config_path) {
  if (target == "qft") {
    if (n_qubits < 1) {
      throw std::invalid_argument("verify qft needs --qubits N (N >= 1)");
    }
    const RecursiveCircuit circuit =
        build_recursive_circuit(qft_gateset(), n_qubits, true);
    const double residual =
        max_abs_diff(realize_unitary(circuit), qft_reference_matrix(n_qubits));
    return finish_check(target, "qubits", n_qubits, residual, 1e-10);
  }
  if (target == "recursion") {
    if (n_qubits < 2) {
      throw std::invalid_argument("verify recursion needs --qubits N (N >= 2)");
    }
    const GateSetConfig config =
        config_path.empty() ? qft_gateset() : load_config(config_path);
    const double residual = check_recursion_identity(config, n_qubits);
    return finish_check(target, "qubits", n_qubits, residual, 1e-10);
  }
  if (target == "amatrix") {
    if (n_qubits < 2) {
      throw std::invalid_argument("verify amatrix needs --qubits N (N >= 2)");
    }
    if ((std::size_t{1} << (n_qubits - 1)) > kDenseSizeCap) {
      throw CapExceededError("amatrix check at n = " +
                             std::to_string(n_qubits) +
                             " exceeds the dense size cap");
    }
    const double residual = max_abs_diff(
        a_matrix_tensor(n_qubits, FourierSign::kNegative),
        twiddle_diagonal(std::size_t{1} << n_qubits, FourierSign::kNegative));
    return finish_check(target, "qubits", n_qubits, residual, 1e-13);
  }
  if (target == "fft") {
    if (size < 2 || (size & (size - 1)) != 0) {
      throw std::invalid_argument(
          "verify fft needs --size N with N a power of two >= 2");
    }
    if (size > kDenseSizeCap) {
      throw CapExceededError("fft check at size " + std::to_string(size) +
                             " exceeds the dense size cap");
    }
    const DftConvention conv{FourierSign::kNegative, FourierNorm::kNone};
    const DenseMatrix dense = dft_matrix(size, conv);
    constexpr int kSignals = 30;
    double residual = 0.0;
    for (int t = 0; t < kSignals; ++t) {
      const Signal sig = random_signal(size, 7000 + static_cast<std::uint64_t>(t));
      residual = std::max(residual,
                          max_abs_diff_signal(fft_radix2(sig, conv),
                                              dense_transform(dense, sig)));
    }
    const double tolerance = 1e-9 * static_cast<double>(size);
    std::cout << "target = " << target << "\n";
    std::cout << "size = " << size << "\n";
    std::cout << "signals = " << kSignals << "\n";
    std::cout << "residual = " << format_17g(residual) << "\n";
    std::cout << "tolerance = " << format_17g(tolerance) << "\n";
    const bool pass = residual <= tolerance;
    std::cout << "result = " << (pass ? "pass" : "fail") << "\n";
    return pass ? kExitOk : kExitCheckFailed;
  }
  throw std::invalid_argument("unknown verify target '" + target +
                              "', expected qft, recursion, amatrix, or fft");
}

int run_fft(const std::string& in_path, const std::string& sign_name,
            const std::string& norm_name, const std::string& out_path) {
  DftConvention conv;
  conv.sign =
      sign_name == "plus" ? FourierSign::kPositive : FourierSign::kNegative;
  conv.norm =
      norm_name == "unitary" ? FourierNorm::kUnitary : FourierNorm::kNone;
  const Signal input = read_signal_file(in_path);
  write_signal_file(out_path, fft_radix2(input, conv));
  return kExitOk;
}

int run_bench(const std::string& config_path, int n_qubits, int trials) {
  const GateSetConfig config = load_config(config_path);
  std::cout << bench_apply(config, n_qubits, trials).to_text();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ladder-circuit transform workbench: synthesis, rendering, analysis, "
      "verification, FFT, benchmarks"};
  app.require_subcommand(1);

  auto* synth = app.add_subcommand(
      "synth", "build a ladder circuit and write its dense unitary");
  std::string synth_config;
  std::string synth_out;
  int synth_qubits = 0;
  bool synth_reversal = false;
  synth->add_option("--config", synth_config, "gate-set config file")
      ->required();
  synth->add_option("--qubits", synth_qubits, "qubit count")->required();
  synth->add_flag("--bit-reversal", synth_reversal,
                  "append the trailing bit-reversal swaps");
  synth->add_option("--out", synth_out, "output matrix file")->required();

  auto* render = app.add_subcommand(
      "render", "render a matrix file as an 8-bit grayscale heatmap");
  std::string render_in;
  std::string render_part = "real";
  std::string render_out;
  render->add_option("input", render_in, "matrix file")->required();
  render->add_option("--part", render_part, "real, imag, or abs");
  render->add_option("--out", render_out, "output image (binary PGM)")
      ->required();

  auto* analyze = app.add_subcommand(
      "analyze", "sparsity and norm report for a matrix file");
  std::string analyze_in;
  double analyze_zero_tol = 1e-12;
  analyze->add_option("input", analyze_in, "matrix file")->required();
  analyze->add_option("--zero-tol", analyze_zero_tol,
                      "magnitude at or below which an entry counts as zero");

  auto* verify =
      app.add_subcommand("verify", "run a built-in identity check");
  std::string verify_target;
  int verify_qubits = 0;
  std::size_t verify_size = 0;
  std::string verify_config;
  verify->add_option("target", verify_target,
                     "qft, recursion, amatrix, or fft")
      ->required();
  verify->add_option("--qubits", verify_qubits,
                     "qubit count (qft, recursion, amatrix)");
  verify->add_option("--size", verify_size, "signal length (fft)");
  verify->add_option("--config", verify_config,
                     "gate-set config for the recursion target "
                     "(defaults to the Fourier set)");

  auto* fft = app.add_subcommand("fft", "transform a signal file");
  std::string fft_in;
  std::string fft_out;
  std::string fft_sign = "minus";
  std::string fft_norm = "none";
  fft->add_option("input", fft_in, "signal file, one re,im pair per line")
      ->required();
  fft->add_option("--sign", fft_sign, "exponent sign (default minus)")
      ->check(CLI::IsMember({"plus", "minus"}));
  fft->add_option("--norm", fft_norm, "normalization (default none)")
      ->check(CLI::IsMember({"none", "unitary"}));
  fft->add_option("--out", fft_out, "output signal file")->required();

  auto* bench = app.add_subcommand(
      "bench", "time gate streaming against the dense matvec");
  std::string bench_config;
  int bench_qubits = 0;
  int bench_trials = 5;
  bench->add_option("--config", bench_config, "gate-set config file")
      ->required();
  bench->add_option("--qubits", bench_qubits, "qubit count")->required();
  bench->add_option("--trials", bench_trials,
                    "timing samples per path (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (synth->parsed()) {
      return run_synth(synth_config, synth_qubits, synth_reversal, synth_out);
    }
    if (render->parsed()) {
      return run_render(render_in, render_part, render_out);
    }
    if (analyze->parsed()) {
      return run_analyze(analyze_in, analyze_zero_tol);
    }
    if (verify->parsed()) {
      return run_verify(verify_target, verify_qubits, verify_size,
                        verify_config);
    }
    if (fft->parsed()) {
      return run_fft(fft_in, fft_sign, fft_norm, fft_out);
    }
    if (bench->parsed()) {
      return run_bench(bench_config, bench_qubits, bench_trials);
    }
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;  // unreachable with require_subcommand(1)
}
