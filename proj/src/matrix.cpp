#include "theta/matrix.hpp"

namespace theta {

CycloMatrix::CycloMatrix(size_t rows, size_t cols, i64 order)
    : order_(order), rows_(rows), cols_(cols), a_(rows * cols, Cyclotomic::zero(order)) {}

CycloMatrix CycloMatrix::identity(size_t n, i64 order) {
  CycloMatrix m(n, n, order);
  Cyclotomic one = Cyclotomic::one(order);
  for (size_t i = 0; i < n; ++i) m.a_[i * n + i] = one;
  return m;
}

void CycloMatrix::set(size_t i, size_t j, const Cyclotomic& v) {
  a_[i * cols_ + j] = v.order() == order_ ? v : v.lifted(order_);
}

void CycloMatrix::set(size_t i, size_t j, const Rational& v) {
  a_[i * cols_ + j] = Cyclotomic::from_rational(order_, v);
}

CycloMatrix CycloMatrix::lifted(i64 new_order) const {
  if (new_order == order_) return *this;
  CycloMatrix m(rows_, cols_, new_order);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].lifted(new_order);
  return m;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix m(cols_, rows_, order_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.a_[j * rows_ + i] = a_[i * cols_ + j];
  return m;
}

CycloMatrix CycloMatrix::scaled(const Cyclotomic& c) const {
  CycloMatrix m(*this);
  Cyclotomic cl = c.order() == order_ ? c : c.lifted(order_);
  for (auto& x : m.a_) x = x * cl;
  return m;
}

CycloMatrix CycloMatrix::operator-() const {
  CycloMatrix m(*this);
  for (auto& x : m.a_) x = -x;
  return m;
}

namespace {
void check_same_shape(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::invalid_argument, "matrix shape mismatch");
}
std::pair<CycloMatrix, CycloMatrix> to_common_order(const CycloMatrix& a, const CycloMatrix& b) {
  i64 m = lcm_ll(a.order(), b.order());
  return {a.lifted(m), b.lifted(m)};
}
} // namespace

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  check_same_shape(a, b);
  if (a.order_ != b.order_) {
    auto [x, y] = to_common_order(a, b);
    return x + y;
  }
  CycloMatrix m(a);
  for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + b.a_[k];
  return m;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) { return a + (-b); }

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols() != b.rows()) fail(errc::invalid_argument, "matrix product shape mismatch");
  if (a.order_ != b.order_) {
    auto [x, y] = to_common_order(a, b);
    return x * y;
  }
  CycloMatrix m(a.rows_, b.cols_, a.order_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Cyclotomic& aik = a.a_[i * a.cols_ + k];
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Cyclotomic& bkj = b.a_[k * b.cols_ + j];
        if (bkj.is_zero()) continue;
        m.a_[i * m.cols_ + j] = m.a_[i * m.cols_ + j] + aik * bkj;
      }
    }
  return m;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.order_ != b.order_) {
    auto [x, y] = to_common_order(a, b);
    return x == y;
  }
  return a.a_ == b.a_;
}

CycloMatrix CycloMatrix::kronecker(const CycloMatrix& b) const {
  if (order_ != b.order_) {
    auto [x, y] = to_common_order(*this, b);
    return x.kronecker(y);
  }
  CycloMatrix m(rows_ * b.rows_, cols_ * b.cols_, order_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Cyclotomic& aij = a_[i * cols_ + j];
      if (aij.is_zero()) continue;
      for (size_t k = 0; k < b.rows_; ++k)
        for (size_t l = 0; l < b.cols_; ++l) {
          const Cyclotomic& bkl = b.a_[k * b.cols_ + l];
          if (bkl.is_zero()) continue;
          m.a_[(i * b.rows_ + k) * m.cols_ + (j * b.cols_ + l)] = aij * bkl;
        }
    }
  return m;
}

bool CycloMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Cyclotomic> CycloMatrix::scalar_value() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  const Cyclotomic& c = a_[0];
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Cyclotomic& x = a_[i * cols_ + j];
      if (i == j ? !(x == c) : !x.is_zero()) return std::nullopt;
    }
  return c;
}

namespace {

// In-place row echelon; returns pivot columns. Entries lifted copies.
std::vector<size_t> row_echelon(std::vector<Cyclotomic>& a, size_t rows, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = rows;
    for (size_t i = row; i < rows; ++i)
      if (!a[i * cols + col].is_zero()) {
        p = i;
        break;
      }
    if (p == rows) continue;
    if (p != row)
      for (size_t j = col; j < cols; ++j) std::swap(a[row * cols + j], a[p * cols + j]);
    Cyclotomic inv = a[row * cols + col].inverse();
    for (size_t j = col; j < cols; ++j) a[row * cols + j] = a[row * cols + j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      const Cyclotomic f = a[i * cols + col];
      if (f.is_zero()) continue;
      for (size_t j = col; j < cols; ++j)
        a[i * cols + j] = a[i * cols + j] - f * a[row * cols + j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

size_t CycloMatrix::rank() const {
  std::vector<Cyclotomic> a(a_);
  return row_echelon(a, rows_, cols_).size();
}

CycloMatrix CycloMatrix::kernel() const {
  std::vector<Cyclotomic> a(a_);
  std::vector<size_t> pivots = row_echelon(a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t nfree = cols_ - pivots.size();
  CycloMatrix k(cols_, nfree, order_);
  size_t out = 0;
  for (size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    k.set(fc, out, Cyclotomic::one(order_));
    for (size_t r = 0; r < pivots.size(); ++r) {
      // pivot row r has leading 1 at pivots[r]; solve backwards
      const Cyclotomic& coeff = a[r * cols_ + fc];
      if (!coeff.is_zero()) k.set(pivots[r], out, -coeff);
    }
    ++out;
  }
  return k;
}

CycloMatrix CycloMatrix::inverse() const {
  if (rows_ != cols_) fail(errc::invalid_argument, "inverse of non-square matrix");
  size_t n = rows_;
  // [A | I] -> [I | A^-1]
  std::vector<Cyclotomic> a(n * 2 * n, Cyclotomic::zero(order_));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i * 2 * n + j] = a_[i * n + j];
    a[i * 2 * n + n + i] = Cyclotomic::one(order_);
  }
  std::vector<size_t> pivots = row_echelon(a, n, 2 * n);
  if (pivots.size() != n || pivots.back() != n - 1)
    fail(errc::invalid_argument, "matrix is singular");
  CycloMatrix inv(n, n, order_);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.set(i, j, a[i * 2 * n + n + j]);
  return inv;
}

size_t family_rank(const std::vector<CycloMatrix>& mats) {
  if (mats.empty()) return 0;
  size_t cells = mats[0].rows() * mats[0].cols();
  i64 order = mats[0].order();
  for (const auto& m : mats) order = lcm_ll(order, m.order());
  std::vector<Cyclotomic> a;
  a.reserve(mats.size() * cells);
  for (const auto& m : mats) {
    CycloMatrix l = m.lifted(order);
    for (size_t i = 0; i < l.rows(); ++i)
      for (size_t j = 0; j < l.cols(); ++j) a.push_back(l.at(i, j));
  }
  return row_echelon(a, mats.size(), cells).size();
}

CycloMatrix vstack(const std::vector<CycloMatrix>& mats) {
  if (mats.empty()) fail(errc::invalid_argument, "vstack of empty list");
  size_t cols = mats[0].cols();
  i64 order = mats[0].order();
  size_t rows = 0;
  for (const auto& m : mats) {
    if (m.cols() != cols) fail(errc::invalid_argument, "vstack column mismatch");
    order = lcm_ll(order, m.order());
    rows += m.rows();
  }
  CycloMatrix out(rows, cols, order);
  size_t r0 = 0;
  for (const auto& m : mats) {
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < cols; ++j) out.set(r0 + i, j, m.at(i, j));
    r0 += m.rows();
  }
  return out;
}

CycloMatrix restrict_kernel(const CycloMatrix& op, const CycloMatrix& basis) {
  // Solve op * (basis * c) = 0: kernel of op*basis in coefficient space,
  // then map back through the basis.
  CycloMatrix composed = op * basis;
  CycloMatrix coeffs = composed.kernel();
  return basis * coeffs;
}

} // namespace theta
