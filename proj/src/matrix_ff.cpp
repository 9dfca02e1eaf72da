#include "weilden/matrix_ff.hpp"

#include <sstream>

#include "weilden/error.hpp"

namespace weilden {

namespace {

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

// Row reduction in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols, std::uint64_t ell) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t inv = invmod(rows[r][c], ell);
    for (auto& v : rows[r]) v = mulmod(v, inv, ell);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t k = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] = sub_mod(rows[i][j], mulmod(k, rows[r][j], ell), ell);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

MatrixFF::MatrixFF(std::size_t n, std::uint64_t ell) : n_(n), ell_(ell), a_(n * n, 0) {}

MatrixFF::MatrixFF(std::size_t n, std::uint64_t ell, std::vector<std::uint64_t> entries)
    : n_(n), ell_(ell), a_(std::move(entries)) {
  if (a_.size() != n * n) raise(ErrorCode::DimensionMismatch, "expected " + std::to_string(n * n) + " entries");
  for (auto& v : a_) v %= ell_;
}

MatrixFF MatrixFF::identity(std::size_t n, std::uint64_t ell) {
  MatrixFF m(n, ell);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % ell;
  return m;
}

MatrixFF MatrixFF::from_rows(const std::vector<std::vector<long long>>& rows, std::uint64_t ell) {
  const std::size_t n = rows.size();
  MatrixFF m(n, ell);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) raise(ErrorCode::DimensionMismatch, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const long long r = rows[i][j] % static_cast<long long>(ell);
      m(i, j) = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(ell) : r);
    }
  }
  return m;
}

MatrixFF MatrixFF::companion(const FFPoly& f) {
  const std::uint64_t ell = f.modulus();
  if (f.degree() < 1 || f.lc() != 1) raise(ErrorCode::InvalidArgument, "companion matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  MatrixFF m(n, ell);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = f.coeff(i) == 0 ? 0 : ell - f.coeff(i);
  return m;
}

MatrixFF MatrixFF::transpose() const {
  MatrixFF t(n_, ell_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatrixFF MatrixFF::scaled(std::uint64_t s) const {
  MatrixFF r = *this;
  for (auto& v : r.a_) v = mulmod(v, s % ell_, ell_);
  return r;
}

MatrixFF operator*(const MatrixFF& a, const MatrixFF& b) {
  if (a.n_ != b.n_ || a.ell_ != b.ell_) raise(ErrorCode::DimensionMismatch, "matrix product");
  const std::size_t n = a.n_;
  const std::uint64_t ell = a.ell_;
  MatrixFF c(n, ell);
  if (ell < (1ULL << 31) && n <= 64) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
        c(i, j) = s % ell;
      }
    }
    return c;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s = add_mod(s, mulmod(a(i, k), b(k, j), ell), ell);
      c(i, j) = s;
    }
  return c;
}

MatrixFF operator+(const MatrixFF& a, const MatrixFF& b) {
  if (a.n_ != b.n_ || a.ell_ != b.ell_) raise(ErrorCode::DimensionMismatch, "matrix sum");
  MatrixFF c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = add_mod(a.a_[i], b.a_[i], a.ell_);
  return c;
}

MatrixFF operator-(const MatrixFF& a, const MatrixFF& b) {
  if (a.n_ != b.n_ || a.ell_ != b.ell_) raise(ErrorCode::DimensionMismatch, "matrix difference");
  MatrixFF c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = sub_mod(a.a_[i], b.a_[i], a.ell_);
  return c;
}

bool MatrixFF::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

std::size_t MatrixFF::rank() const {
  std::vector<std::vector<std::uint64_t>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  return rref(rows, n_, ell_).size();
}

std::uint64_t MatrixFF::det() const {
  std::vector<std::uint64_t> m = a_;
  std::uint64_t d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      d = d == 0 ? 0 : ell_ - d;
    }
    const std::uint64_t p = m[c * n_ + c];
    d = mulmod(d, p, ell_);
    const std::uint64_t inv = invmod(p, ell_);
    for (std::size_t i = c + 1; i < n_; ++i) {
      const std::uint64_t k = mulmod(m[i * n_ + c], inv, ell_);
      if (!k) continue;
      for (std::size_t j = c; j < n_; ++j) m[i * n_ + j] = sub_mod(m[i * n_ + j], mulmod(k, m[c * n_ + j], ell_), ell_);
    }
  }
  return d % ell_;
}

MatrixFF MatrixFF::inverse() const {
  std::vector<std::vector<std::uint64_t>> rows(n_, std::vector<std::uint64_t>(2 * n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
    rows[i][n_ + i] = 1 % ell_;
  }
  const auto piv = rref(rows, n_, ell_);
  if (piv.size() != n_) raise(ErrorCode::InvalidArgument, "matrix is singular");
  MatrixFF inv(n_, ell_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) inv(i, j) = rows[i][n_ + j];
  return inv;
}

FFPoly MatrixFF::charpoly() const {
  // Reduce to upper Hessenberg form by similarity, then use the recurrence
  // for the leading principal characteristic polynomials.
  const std::size_t n = n_;
  const std::uint64_t ell = ell_;
  std::vector<std::uint64_t> h = a_;
  auto H = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && H(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, c + 1));
    }
    const std::uint64_t inv = invmod(H(c + 1, c), ell);
    for (std::size_t i = c + 2; i < n; ++i) {
      const std::uint64_t k = mulmod(H(i, c), inv, ell);
      if (!k) continue;
      for (std::size_t j = 0; j < n; ++j) H(i, j) = sub_mod(H(i, j), mulmod(k, H(c + 1, j), ell), ell);
      for (std::size_t r = 0; r < n; ++r) H(r, c + 1) = add_mod(H(r, c + 1), mulmod(k, H(r, i), ell), ell);
    }
  }
  std::vector<FFPoly> p(n + 1);
  p[0] = FFPoly::constant(1, ell);
  const FFPoly x = FFPoly::x(ell);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (x - FFPoly::constant(H(m - 1, m - 1), ell)) * p[m - 1];
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mulmod(t, H(m - i, m - i - 1), ell);
      const std::uint64_t coef = mulmod(t, H(m - i - 1, m - 1), ell);
      if (coef) p[m] = p[m] - p[m - i - 1].scaled(coef);
    }
  }
  return p[n];
}

bool MatrixFF::is_cyclic() const {
  std::vector<std::vector<std::uint64_t>> powers;
  MatrixFF pw = identity(n_, ell_);
  for (std::size_t k = 0; k < n_; ++k) {
    powers.push_back(pw.a_);
    pw = pw * *this;
  }
  return vector_rank(std::move(powers), ell_) == n_;
}

std::string MatrixFF::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

std::vector<std::vector<std::uint64_t>> nullspace(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                                                  std::uint64_t ell) {
  const auto piv = rref(rows, cols, ell);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1 % ell;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      const std::uint64_t a = rows[r][free];
      v[piv[r]] = a == 0 ? 0 : ell - a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t vector_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t ell) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  return rref(rows, cols, ell).size();
}

}  // namespace weilden
