#include "qsynth/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qsynth/matrix_io.hpp"

namespace qsynth {

namespace {

double select_part(Complex z, MatrixPart part) {
  switch (part) {
    case MatrixPart::kReal:
      return z.real();
    case MatrixPart::kImag:
      return z.imag();
    case MatrixPart::kAbs:
      return std::abs(z);
  }
  throw std::logic_error("unhandled matrix part");
}

}  // namespace

MatrixPart parse_matrix_part(const std::string& name) {
  if (name == "real") return MatrixPart::kReal;
  if (name == "imag") return MatrixPart::kImag;
  if (name == "abs") return MatrixPart::kAbs;
  throw std::invalid_argument("unknown matrix part '" + name +
                              "', expected real, imag, or abs");
}

std::vector<std::uint8_t> heatmap_pixels(const DenseMatrix& m,
                                         MatrixPart part) {
  const std::size_t n = m.dim();
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      values.push_back(select_part(m(r, c), part));
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  std::vector<std::uint8_t> pixels(values.size(), 0);
  if (hi > lo) {
    const double span = hi - lo;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double level = std::floor((values[i] - lo) / span * 255.0 + 0.5);
      pixels[i] = static_cast<std::uint8_t>(
          std::clamp(level, 0.0, 255.0));
    }
  }
  return pixels;
}

void write_heatmap_pgm(std::ostream& out, const DenseMatrix& m,
                       MatrixPart part) {
  const std::vector<std::uint8_t> pixels = heatmap_pixels(m, part);
  const std::size_t n = m.dim();
  out << "P5\n" << n << " " << n << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
}

void write_heatmap_pgm_file(const std::string& path, const DenseMatrix& m,
                            MatrixPart part) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  write_heatmap_pgm(out, m, part);
  if (!out) throw FileFormatError("write to '" + path + "' failed");
}

}  // namespace qsynth
