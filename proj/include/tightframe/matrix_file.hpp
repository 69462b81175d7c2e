// matrix_file.hpp — JSON matrix interchange format used by the CLI.
//
//   {"rows": R, "cols": C, "data": [[re, im], ...]}   // R*C pairs, row-major
//
// Numbers are written with 17 significant digits so a write/read cycle is
// bit-exact.

#pragma once

#include <string>

#include "tightframe/matcore.hpp"

namespace tightframe {

ComplexMatrix parse_matrix(const std::string& text);
std::string format_matrix(const ComplexMatrix& A);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& A);

// A 1 x n or n x 1 matrix file read as a vector.
ComplexVector read_vector_file(const std::string& path);

}  // namespace tightframe
