// fixtures.hpp — the two reference diagonalizing matrices and their spectra,
// in closed form, plus the text fixture format (row-major decimal, 17
// significant digits, '#' comment lines).
//
// The matrices ship as data files because reproducing the reference
// commutator tables needs these exact row signs and, for the degenerate
// eigenvalue pair of case 1, this exact basis choice.

#pragma once

#include "lee/phase_algebra.hpp"

#include <string>

namespace lee {

// Case 1: diagonalizes h(-1, 1/3); eigenvalues (8/3, 1, 1, 1/3).
Matrix4 case1_fixture_S();
Vector4 case1_eigenvalues();

// Case 2: diagonalizes h(1, 1); eigenvalues ((5+s17)/2, 1+s2, (5-s17)/2, 1-s2).
Matrix4 case2_fixture_S();
Vector4 case2_eigenvalues();

// Reads a 4x4 matrix: four non-comment lines of four decimal numbers.
// Throws std::runtime_error naming the path when the file is missing or short.
Matrix4 load_matrix4(const std::string& path);

// Writes the fixture format with an optional leading comment.
void save_matrix4(const std::string& path, const Matrix4& m, const std::string& comment);

}  // namespace lee
