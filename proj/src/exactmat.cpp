#include "origami/exactmat.hpp"

#include <algorithm>

#include "origami/errors.hpp"

namespace origami {

ZMat zmat(std::size_t rows, std::size_t cols) {
  return ZMat(rows, ZVec(cols, mpz_class(0)));
}

QMat qmat(std::size_t rows, std::size_t cols) {
  return QMat(rows, std::vector<mpq_class>(cols, mpq_class(0)));
}

ZMat zmul(const ZMat& a, const ZMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  ZMat out = zmat(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

ZMat ztranspose(const ZMat& a) {
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  ZMat out = zmat(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

bool is_zero(const ZMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

std::size_t rank_z(ZMat m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  mpz_class prev(1);
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

std::size_t rank_q(const QMat& m) {
  ZMat z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpz_class l(1);
    for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    z[i].reserve(m[i].size());
    for (const auto& x : m[i]) {
      mpq_class s = x * mpq_class(l);
      s.canonicalize();
      if (s.get_den() != 1) throw InvariantViolation("denominator clearing failed");
      z[i].push_back(s.get_num());
    }
  }
  return rank_z(std::move(z));
}

mpz_class det_z(ZMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("det: matrix not square");
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev(1);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    std::size_t piv = r;
    while (piv < n && m[piv][r] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = r + 1; j < n; ++j) {
        mpz_class t = m[r][r] * m[i][j] - m[i][r] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][r] = 0;
    }
    prev = m[r][r];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

ColumnEchelon column_echelon(ZMat m, bool track_u) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  ColumnEchelon out;
  ZMat u;
  if (track_u) {
    u = zmat(cols, cols);
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  }
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    if (track_u)
      for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][a], u[i][b]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    // column dst -= q * column src
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
    if (track_u)
      for (std::size_t i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_negate = [&](std::size_t c) {
    for (std::size_t i = 0; i < rows; ++i) m[i][c] = -m[i][c];
    if (track_u)
      for (std::size_t i = 0; i < cols; ++i) u[i][c] = -u[i][c];
  };

  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // Euclidean reduction across columns lead.. on row r.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = lead; j < cols; ++j)
        if (m[r][j] != 0 &&
            (best == cols || mpz_cmpabs(m[r][j].get_mpz_t(), m[r][best].get_mpz_t()) < 0))
          best = j;
      if (best == cols) break;  // row r is zero past lead
      col_swap(lead, best);
      bool others = false;
      for (std::size_t j = lead + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        mpz_class q = m[r][j] / m[r][lead];  // truncating division is fine here
        col_axpy(j, lead, q);
        if (m[r][j] != 0) others = true;
      }
      if (!others) break;
    }
    if (m[r][lead] != 0) {
      if (m[r][lead] < 0) col_negate(lead);
      out.pivot_rows.push_back(static_cast<int>(r));
      out.pivot_values.push_back(m[r][lead]);
      ++lead;
    }
  }
  out.mat = std::move(m);
  if (track_u) out.u = std::move(u);
  return out;
}

ZMat integer_kernel(const ZMat& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  auto ech = column_echelon(a, true);
  const std::size_t nz = ech.pivot_rows.size();
  ZMat basis = zmat(cols, cols - nz);
  for (std::size_t j = nz; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i) basis[i][j - nz] = ech.u[i][j];
  return basis;
}

ZVec reduce_by_echelon(const ColumnEchelon& e, ZVec v) {
  for (std::size_t k = 0; k < e.pivot_rows.size(); ++k) {
    if (e.pivot_values[k] != 1)
      throw InvariantViolation("quotient lattice pivot is not a unit");
    const int r = e.pivot_rows[k];
    const mpz_class q = v[r];
    if (q == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * e.mat[i][k];
  }
  return v;
}

}  // namespace origami
