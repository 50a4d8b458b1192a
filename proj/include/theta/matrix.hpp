#pragma once

#include <optional>
#include <vector>

#include "theta/cyclotomic.hpp"

namespace theta {

// Dense matrix over Q(zeta_N). All entries share the order fixed at
// construction; assignments lift incoming values to that order.
class CycloMatrix {
public:
  CycloMatrix() : order_(1), rows_(0), cols_(0) {}
  CycloMatrix(size_t rows, size_t cols, i64 order);

  static CycloMatrix identity(size_t n, i64 order);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  i64 order() const { return order_; }

  const Cyclotomic& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, const Cyclotomic& v);
  void set(size_t i, size_t j, const Rational& v);

  CycloMatrix lifted(i64 new_order) const;
  CycloMatrix transpose() const;
  CycloMatrix scaled(const Cyclotomic& c) const;
  CycloMatrix operator-() const;

  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

  CycloMatrix kronecker(const CycloMatrix& b) const;

  bool is_zero() const;
  // c such that *this == c * I, if any.
  std::optional<Cyclotomic> scalar_value() const;

  size_t rank() const;
  // Columns form a basis of the right kernel {v : A v = 0}.
  CycloMatrix kernel() const;
  CycloMatrix inverse() const; // errc::invalid_argument when singular

private:
  i64 order_;
  size_t rows_, cols_;
  std::vector<Cyclotomic> a_;
};

// Row-major flattening of each matrix; rank of their span in the
// rows*cols-dimensional space.
size_t family_rank(const std::vector<CycloMatrix>& mats);

// Stack matrices vertically (shared column count).
CycloMatrix vstack(const std::vector<CycloMatrix>& mats);

// Columns of `basis` spanning a subspace; returns basis matrix for the
// intersection with ker(op).
CycloMatrix restrict_kernel(const CycloMatrix& op, const CycloMatrix& basis);

} // namespace theta
