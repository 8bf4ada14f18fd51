#include "schroeder/transfer.hpp"

#include <utility>

#include "schroeder/errors.hpp"

namespace schroeder {

PolyMatrix transfer_matrix(int k) {
  if (k < 0) throw InvalidInput("transfer_matrix: k must be nonnegative");
  const IntPoly t = IntPoly::x();
  const IntPoly t2 = IntPoly::monomial(BigInt(1), 2);
  PolyMatrix a = PolyMatrix::Constant(k + 1, k + 1, IntPoly());
  for (int i = 0; i <= k; ++i) {
    a(i, i) = t2;
    if (i > 0) a(i, i - 1) = t;
    if (i < k) a(i, i + 1) = t;
  }
  return a;
}

PolyMatrix transfer_complement(int k) {
  PolyMatrix m = -transfer_matrix(k);
  for (int i = 0; i <= k; ++i) m(i, i) += IntPoly(BigInt(1));
  return m;
}

IntPoly bareiss_det(PolyMatrix m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw InvalidInput("bareiss_det: matrix is not square");
  if (n == 0) return IntPoly(BigInt(1));
  bool negate = false;
  IntPoly previous(BigInt(1));
  for (Eigen::Index p = 0; p + 1 < n; ++p) {
    if (m(p, p).is_zero()) {
      Eigen::Index swap = p + 1;
      while (swap < n && m(swap, p).is_zero()) ++swap;
      if (swap == n) return IntPoly();
      m.row(p).swap(m.row(swap));
      negate = !negate;
    }
    for (Eigen::Index i = p + 1; i < n; ++i) {
      for (Eigen::Index j = p + 1; j < n; ++j)
        m(i, j) = (m(p, p) * m(i, j) - m(i, p) * m(p, j)).divide_exact(previous);
      m(i, p) = IntPoly();
    }
    previous = m(p, p);
  }
  IntPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

IntPoly minor_of(const PolyMatrix& m, int row, int col) {
  const auto n = static_cast<int>(m.rows());
  if (row < 0 || row >= n || col < 0 || col >= static_cast<int>(m.cols()))
    throw InvalidInput("minor_of: index out of range");
  PolyMatrix sub(n - 1, m.cols() - 1);
  for (int i = 0, si = 0; i < n; ++i) {
    if (i == row) continue;
    for (int j = 0, sj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      sub(si, sj++) = m(i, j);
    }
    ++si;
  }
  return bareiss_det(std::move(sub));
}

IntPoly transfer_det(int k) { return bareiss_det(transfer_complement(k)); }

RationalGF transfer_minor_gf(int k, int r, int s) {
  if (r < 0 || s < 0 || r > k || s > k) throw InvalidInput("transfer_minor_gf: heights must lie in 0..k");
  const PolyMatrix m = transfer_complement(k);
  IntPoly num = minor_of(m, s, r);
  if ((r + s) % 2 != 0) num = -num;
  return RationalGF(num, bareiss_det(m));
}

}  // namespace schroeder
