// Grayscale heatmaps of a matrix part (real, imaginary, or magnitude) as
// 8-bit binary PGM ("P5"). Pixels are min/max normalized per image:
//   pixel = floor((v - v_min) / (v_max - v_min) * 255 + 0.5)
// and a degenerate range (v_max = v_min) maps every pixel to 0, so identical
// inputs always produce byte-identical files.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsynth/numerics.hpp"

namespace qsynth {

enum class MatrixPart { kReal, kImag, kAbs };

/// Accepts "real", "imag", or "abs"; anything else is an invalid_argument.
MatrixPart parse_matrix_part(const std::string& name);

/// Row-major normalized pixels of the selected part.
std::vector<std::uint8_t> heatmap_pixels(const DenseMatrix& m,
                                         MatrixPart part);

void write_heatmap_pgm(std::ostream& out, const DenseMatrix& m,
                       MatrixPart part);
void write_heatmap_pgm_file(const std::string& path, const DenseMatrix& m,
                            MatrixPart part);

}  // namespace qsynth
