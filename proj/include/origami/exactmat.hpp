#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace origami {

// Dense row-major matrices over Z and Q. Sizes here are small (a few hundred
// rows at most), so plain vectors of GMP values are fine.
using ZMat = std::vector<std::vector<mpz_class>>;
using QMat = std::vector<std::vector<mpq_class>>;
using ZVec = std::vector<mpz_class>;

ZMat zmat(std::size_t rows, std::size_t cols);
QMat qmat(std::size_t rows, std::size_t cols);
ZMat zmul(const ZMat& a, const ZMat& b);
ZMat ztranspose(const ZMat& a);
bool is_zero(const ZMat& a);

// Rank via fraction-free (Bareiss) elimination; exact.
std::size_t rank_z(ZMat m);
// Clears denominators row by row, then rank_z.
std::size_t rank_q(const QMat& m);

// Determinant of a square integer matrix, fraction-free.
mpz_class det_z(ZMat m);

// Column echelon form over Z (integer column operations only), the shape used
// for quotienting a free Z-module by a column lattice. pivot_rows is strictly
// increasing, one entry per nonzero column of `mat`.
struct ColumnEchelon {
  ZMat mat;
  std::vector<int> pivot_rows;
  std::vector<mpz_class> pivot_values;
  // Set when requested: unimodular U with original * U = mat (columns of U
  // past the nonzero columns of mat span the integer kernel).
  ZMat u;
};

ColumnEchelon column_echelon(ZMat m, bool track_u = false);

// Basis of { x in Z^cols : a x = 0 }, returned as columns.
ZMat integer_kernel(const ZMat& a);

// Reduces v modulo the column lattice of e. Requires every pivot to be a unit
// (throws InvariantViolation otherwise); afterwards v vanishes on all pivot
// rows, so its nonzero support is the quotient coordinate set.
ZVec reduce_by_echelon(const ColumnEchelon& e, ZVec v);

}  // namespace origami
