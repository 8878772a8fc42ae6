#include "qsynth/matrix_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace qsynth {

namespace {

// Parses "re,im" starting at text[pos]; advances pos past the pair.
Complex parse_complex(const std::string& text, std::size_t& pos,
                      std::size_t line_no) {
  const auto bad = [line_no](const std::string& what) -> FileFormatError {
    return FileFormatError("line " + std::to_string(line_no) + ": " + what);
  };

  const char* start = text.c_str() + pos;
  char* end = nullptr;
  const double re = std::strtod(start, &end);
  if (end == start) throw bad("expected a number");
  if (*end != ',') throw bad("expected ',' between real and imaginary parts");
  const char* imag_start = end + 1;
  const double im = std::strtod(imag_start, &end);
  if (end == imag_start) throw bad("expected a number after ','");
  pos = static_cast<std::size_t>(end - text.c_str());
  return Complex{re, im};
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

std::string format_17g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_complex(Complex z) {
  return format_17g(z.real()) + "," + format_17g(z.imag());
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  const std::size_t n = m.dim();
  out << "N " << n << "\n";
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c > 0) out << ' ';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

DenseMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FileFormatError("empty input, expected an 'N <dim>' header");
  }
  std::size_t dim = 0;
  {
    std::istringstream header(line);
    std::string tag;
    if (!(header >> tag) || tag != "N" || !(header >> dim) || dim < 1) {
      throw FileFormatError("malformed header '" + line +
                            "', expected 'N <dim>'");
    }
    std::string extra;
    if (header >> extra) {
      throw FileFormatError("trailing content in header '" + line + "'");
    }
  }

  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!std::getline(in, line)) {
      throw FileFormatError("unexpected end of input at row " +
                            std::to_string(r + 1) + " of " +
                            std::to_string(dim));
    }
    const std::size_t line_no = r + 2;
    std::size_t pos = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      if (c > 0) {
        if (pos >= line.size() || line[pos] != ' ') {
          throw FileFormatError("line " + std::to_string(line_no) +
                                ": expected a single space between entries");
        }
        ++pos;
      }
      entries.push_back(parse_complex(line, pos, line_no));
    }
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\r')) ++pos;
    if (pos != line.size()) {
      throw FileFormatError("line " + std::to_string(line_no) +
                            ": trailing content after " +
                            std::to_string(dim) + " entries");
    }
  }
  for (std::size_t line_no = dim + 2; std::getline(in, line); ++line_no) {
    if (line.find_first_not_of(" \r") != std::string::npos) {
      throw FileFormatError("line " + std::to_string(line_no) +
                            ": unexpected content after the last row");
    }
  }
  return DenseMatrix(dim, entries);
}

void write_matrix_file(const std::string& path, const DenseMatrix& m) {
  auto out = open_for_write(path);
  write_matrix(out, m);
  if (!out) throw FileFormatError("write to '" + path + "' failed");
}

DenseMatrix read_matrix_file(const std::string& path) {
  auto in = open_for_read(path);
  return read_matrix(in);
}

void write_signal(std::ostream& out, const Signal& s) {
  for (const Complex& z : s) {
    out << format_complex(z) << '\n';
  }
}

Signal read_signal(std::istream& in) {
  Signal s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = line.size();
    while (end > pos && (line[end - 1] == ' ' || line[end - 1] == '\r')) --end;
    if (pos == end) continue;  // blank line
    std::size_t cursor = pos;
    const Complex z = parse_complex(line, cursor, line_no);
    if (cursor != end) {
      throw FileFormatError("line " + std::to_string(line_no) +
                            ": trailing content after the 're,im' pair");
    }
    s.push_back(z);
  }
  if (s.empty()) {
    throw FileFormatError("signal input holds no samples");
  }
  return s;
}

void write_signal_file(const std::string& path, const Signal& s) {
  auto out = open_for_write(path);
  write_signal(out, s);
  if (!out) throw FileFormatError("write to '" + path + "' failed");
}

Signal read_signal_file(const std::string& path) {
  auto in = open_for_read(path);
  return read_signal(in);
}

}  // namespace qsynth
