// Text formats for matrices and signals.
//
// Matrix files: a header line "N <dim>", then dim lines of dim entries
// "re,im" separated by single spaces. Signal files: one "re,im" pair per
// line, no header. Numbers are written with 17 significant digits so a
// write/read round trip reproduces every double bit for bit.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qsynth/numerics.hpp"
#include "qsynth/transforms.hpp"

namespace qsynth {

class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "%.17g" rendering, the round-trip-safe precision for doubles.
std::string format_17g(double value);

/// "re,im" with both parts in 17-significant-digit form.
std::string format_complex(Complex z);

void write_matrix(std::ostream& out, const DenseMatrix& m);
DenseMatrix read_matrix(std::istream& in);
void write_matrix_file(const std::string& path, const DenseMatrix& m);
DenseMatrix read_matrix_file(const std::string& path);

void write_signal(std::ostream& out, const Signal& s);
Signal read_signal(std::istream& in);
void write_signal_file(const std::string& path, const Signal& s);
Signal read_signal_file(const std::string& path);

}  // namespace qsynth
