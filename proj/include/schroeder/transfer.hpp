#pragma once

#include <Eigen/Core>

#include "schroeder/polynomial.hpp"
#include "schroeder/series.hpp"

namespace schroeder {

using PolyMatrix = Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic>;

/// A_k in the variable t = sqrt(x): (k+1) x (k+1), t^2 on the diagonal and t
/// next to it.
PolyMatrix transfer_matrix(int k);
/// I - A_k
PolyMatrix transfer_complement(int k);

/// Determinant by fraction-free elimination. The empty matrix has determinant 1.
IntPoly bareiss_det(PolyMatrix m);
/// Determinant of m with row `row` and column `col` removed (0-based).
IntPoly minor_of(const PolyMatrix& m, int row, int col);

/// det(I - A_k) as a polynomial in t.
IntPoly transfer_det(int k);
/// Generating function in t for paths from height r to height s that stay in
/// 0..k: (-1)^(r+s) minor(s, r) / det(I - A_k), with 0-based indices equal to
/// heights.
RationalGF transfer_minor_gf(int k, int r, int s);

}  // namespace schroeder
