#pragma once

#include "abelweb/poly.hpp"

#include <vector>

namespace abelweb {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>; // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix &m, std::size_t ncols);
std::size_t rank(QMatrix m, std::size_t ncols);
// Basis of {v : m v = 0}, one vector per free column, in RREF-derived canonical form.
std::vector<QVector> nullspace(QMatrix m, std::size_t ncols);
// Row space basis in RREF.
std::vector<QVector> row_basis(std::vector<QVector> rows, std::size_t ncols);

} // namespace abelweb
