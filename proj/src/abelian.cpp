#include "theta/abelian.hpp"

#include <algorithm>
#include <functional>

namespace theta {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<i64> factors) : factors_(std::move(factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) fail(errc::invalid_argument, "invariant factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i] % factors_[i + 1] != 0)
      fail(errc::invalid_argument, "invariant factors must satisfy n_{i+1} | n_i");
  }
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (i64 n : factors_) o *= n;
  return o;
}

unsigned long long FiniteAbelianGroup::order_ull() const {
  unsigned long long o = 1;
  for (i64 n : factors_) {
    if (o > (1ULL << 62) / static_cast<unsigned long long>(n))
      fail(errc::invalid_argument, "group too large to enumerate");
    o *= static_cast<unsigned long long>(n);
  }
  return o;
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement(*this, std::vector<i64>(rank(), 0));
}

GroupElement FiniteAbelianGroup::generator(size_t i) const {
  std::vector<i64> c(rank(), 0);
  c.at(i) = 1;
  return GroupElement(*this, std::move(c));
}

GroupElement FiniteAbelianGroup::element(std::vector<i64> coords) const {
  return GroupElement(*this, std::move(coords));
}

GroupElement FiniteAbelianGroup::element_at(unsigned long long index) const {
  std::vector<i64> c(rank());
  for (size_t i = 0; i < rank(); ++i) {
    c[i] = static_cast<i64>(index % static_cast<unsigned long long>(factors_[i]));
    index /= static_cast<unsigned long long>(factors_[i]);
  }
  return GroupElement(*this, std::move(c));
}

unsigned long long FiniteAbelianGroup::index_of(const GroupElement& x) const {
  unsigned long long idx = 0;
  for (size_t i = rank(); i-- > 0;)
    idx = idx * static_cast<unsigned long long>(factors_[i]) +
          static_cast<unsigned long long>(x.coords()[i]);
  return idx;
}

DualElement FiniteAbelianGroup::dual_zero() const {
  return DualElement(*this, std::vector<i64>(rank(), 0));
}

DualElement FiniteAbelianGroup::dual_generator(size_t i) const {
  std::vector<i64> c(rank(), 0);
  c.at(i) = 1;
  return DualElement(*this, std::move(c));
}

DualElement FiniteAbelianGroup::dual_element(std::vector<i64> coords) const {
  return DualElement(*this, std::move(coords));
}

DualElement FiniteAbelianGroup::dual_element_at(unsigned long long index) const {
  GroupElement e = element_at(index);
  return DualElement(*this, e.coords());
}

namespace {
std::vector<i64> reduce_coords(const FiniteAbelianGroup& g, std::vector<i64> coords) {
  if (coords.size() != g.rank())
    fail(errc::invalid_argument, "coordinate count does not match group rank");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = mod_ll(coords[i], g.factors()[i]);
  return coords;
}
void check_same_parent(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  if (a != b) fail(errc::parent_mismatch, "elements belong to different groups");
}
} // namespace

GroupElement::GroupElement(FiniteAbelianGroup parent, std::vector<i64> coords)
    : parent_(std::move(parent)), coords_(reduce_coords(parent_, std::move(coords))) {}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](i64 c) { return c == 0; });
}

i64 GroupElement::order() const {
  i64 o = 1;
  for (size_t i = 0; i < coords_.size(); ++i) {
    i64 n = parent_.factors()[i];
    o = lcm_ll(o, n / gcd_ll(n, coords_[i]));
  }
  return o;
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  check_same_parent(parent_, o.parent_);
  std::vector<i64> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + (-o); }

GroupElement GroupElement::operator-() const {
  std::vector<i64> c(coords_);
  for (auto& x : c) x = -x;
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::scaled(i64 m) const {
  std::vector<i64> c(coords_);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = mod_ll(c[i] % parent_.factors()[i] * mod_ll(m, parent_.factors()[i]),
                  parent_.factors()[i]);
  return GroupElement(parent_, std::move(c));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.parent_ == b.parent_ && a.coords_ == b.coords_;
}

bool operator<(const GroupElement& a, const GroupElement& b) { return a.coords_ < b.coords_; }

DualElement::DualElement(FiniteAbelianGroup parent, std::vector<i64> coords)
    : parent_(std::move(parent)), coords_(reduce_coords(parent_, std::move(coords))) {}

bool DualElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](i64 c) { return c == 0; });
}

RootOfUnity DualElement::eval(const GroupElement& x) const {
  check_same_parent(parent_, x.parent());
  i64 n1 = parent_.exponent();
  i64 e = 0;
  for (size_t i = 0; i < coords_.size(); ++i) {
    i64 ni = parent_.factors()[i];
    e = mod_ll(e + coords_[i] % n1 * ((x.coords()[i] * (n1 / ni)) % n1), n1);
  }
  return RootOfUnity(n1, e);
}

DualElement DualElement::operator+(const DualElement& o) const {
  check_same_parent(parent_, o.parent_);
  std::vector<i64> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return DualElement(parent_, std::move(c));
}

DualElement DualElement::operator-() const {
  std::vector<i64> c(coords_);
  for (auto& x : c) x = -x;
  return DualElement(parent_, std::move(c));
}

DualElement DualElement::scaled(i64 m) const {
  std::vector<i64> c(coords_);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = mod_ll(c[i] % parent_.factors()[i] * mod_ll(m, parent_.factors()[i]),
                  parent_.factors()[i]);
  return DualElement(parent_, std::move(c));
}

bool operator==(const DualElement& a, const DualElement& b) {
  return a.parent_ == b.parent_ && a.coords_ == b.coords_;
}

FiniteAbelianGroup dual_group(const FiniteAbelianGroup& g) { return g; }

GroupHom::GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target,
                   std::vector<std::vector<i64>> gen_images)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(gen_images)) {
  if (rows_.size() != source_.rank())
    fail(errc::invalid_argument, "homomorphism needs one image per source generator");
  for (size_t j = 0; j < rows_.size(); ++j) {
    rows_[j] = reduce_coords(target_, std::move(rows_[j]));
    // well-definedness: n_j * image(gen_j) = 0 in the target
    GroupElement img(target_, rows_[j]);
    if (!img.scaled(source_.factors()[j]).is_zero())
      fail(errc::invalid_argument, "generator image order does not divide relation order");
  }
}

GroupHom GroupHom::identity(const FiniteAbelianGroup& g) {
  std::vector<std::vector<i64>> rows(g.rank());
  for (size_t j = 0; j < g.rank(); ++j) rows[j] = g.generator(j).coords();
  return GroupHom(g, g, std::move(rows));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  check_same_parent(source_, x.parent());
  std::vector<i64> c(target_.rank(), 0);
  for (size_t j = 0; j < rows_.size(); ++j) {
    i64 xj = x.coords()[j];
    if (xj == 0) continue;
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = mod_ll(c[i] + rows_[j][i] % target_.factors()[i] * (xj % target_.factors()[i]),
                    target_.factors()[i]);
  }
  return GroupElement(target_, std::move(c));
}

GroupHom GroupHom::compose(const GroupHom& g) const {
  if (g.target_ != source_) fail(errc::parent_mismatch, "homomorphisms not composable");
  std::vector<std::vector<i64>> rows(g.source_.rank());
  for (size_t j = 0; j < rows.size(); ++j)
    rows[j] = apply(GroupElement(source_, g.rows_[j])).coords();
  return GroupHom(g.source_, target_, std::move(rows));
}

bool operator==(const GroupHom& a, const GroupHom& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.rows_ == b.rows_;
}

namespace {

using ZMat = std::vector<std::vector<Integer>>;

void add_row(ZMat& m, size_t dst, size_t src, const Integer& f) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}
void add_col(ZMat& m, size_t dst, size_t src, const Integer& f) {
  for (size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}
void swap_rows(ZMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }
void swap_cols(ZMat& m, size_t a, size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}
void negate_row(ZMat& m, size_t r) {
  for (auto& x : m[r]) x = -x;
}

} // namespace

std::vector<std::vector<Integer>> identity_zmatrix(size_t n) {
  ZMat m(n, std::vector<Integer>(n, Integer(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::vector<Integer>> zmat_mul(const ZMat& a, const ZMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  ZMat c(n, std::vector<Integer>(m, Integer(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

SmithDecomposition smith_decompose(ZMat a) {
  size_t m = a.size();
  size_t n = m == 0 ? 0 : a[0].size();
  SmithDecomposition out;
  out.U = identity_zmatrix(m);
  out.V = identity_zmatrix(n);
  size_t nmin = std::min(m, n);

  auto abs_at = [&](size_t i, size_t j) { return boost::multiprecision::abs(a[i][j]); };

  for (size_t s = 0; s < nmin; ++s) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block to (s, s)
      size_t pi = m, pj = n;
      Integer best = 0;
      for (size_t i = s; i < m; ++i)
        for (size_t j = s; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs_at(i, j) < best)) {
            best = abs_at(i, j);
            pi = i;
            pj = j;
          }
      if (pi == m) break; // trailing block is zero
      if (pi != s) {
        swap_rows(a, s, pi);
        swap_rows(out.U, s, pi);
      }
      if (pj != s) {
        swap_cols(a, s, pj);
        swap_cols(out.V, s, pj);
      }
      bool clean = true;
      for (size_t i = s + 1; i < m; ++i)
        if (a[i][s] != 0) {
          Integer q = a[i][s] / a[s][s];
          add_row(a, i, s, -q);
          add_row(out.U, i, s, -q);
          if (a[i][s] != 0) clean = false;
        }
      for (size_t j = s + 1; j < n; ++j)
        if (a[s][j] != 0) {
          Integer q = a[s][j] / a[s][s];
          add_col(a, j, s, -q);
          add_col(out.V, j, s, -q);
          if (a[s][j] != 0) clean = false;
        }
      if (!clean) continue;
      // pivot must divide the rest of the block
      bool divides = true;
      for (size_t i = s + 1; i < m && divides; ++i)
        for (size_t j = s + 1; j < n && divides; ++j)
          if (a[i][j] % a[s][s] != 0) {
            add_row(a, s, i, Integer(1));
            add_row(out.U, s, i, Integer(1));
            divides = false;
          }
      if (divides) break;
    }
    if (a[s][s] < 0) {
      negate_row(a, s);
      negate_row(out.U, s);
    }
  }
  out.diag.resize(nmin);
  out.rank = 0;
  for (size_t s = 0; s < nmin; ++s) {
    out.diag[s] = a[s][s];
    if (out.diag[s] != 0) ++out.rank;
  }
  return out;
}

std::vector<std::vector<Integer>> zmat_inverse_unimodular(const ZMat& u) {
  size_t n = u.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rational(u[i][j]);
    a[i][n + i] = 1;
  }
  for (size_t col = 0, row = 0; col < n; ++col) {
    size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) fail(errc::internal_invariant, "singular matrix passed as unimodular");
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (size_t j = col; j < 2 * n; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (size_t j = col; j < 2 * n; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  ZMat out(n, std::vector<Integer>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Rational& v = a[i][n + j];
      if (boost::multiprecision::denominator(v) != 1)
        fail(errc::internal_invariant, "matrix is not unimodular");
      out[i][j] = boost::multiprecision::numerator(v);
    }
  return out;
}

PresentedGroup group_from_presentation(const ZMat& relations) {
  size_t m = relations.size();
  SmithDecomposition s = smith_decompose(relations);
  if (s.rank < m) fail(errc::infinite_group, "presentation has a free quotient");

  // Z^m / R Z^k = sum Z/d_i via x -> (U x)_i mod d_i. Keep d_i > 1, in
  // descending divisibility to match the group convention.
  std::vector<size_t> keep;
  for (size_t i = 0; i < m; ++i)
    if (s.diag[i] > 1) keep.push_back(i);
  std::reverse(keep.begin(), keep.end());

  std::vector<i64> factors;
  for (size_t i : keep) factors.push_back(static_cast<i64>(s.diag[i]));
  PresentedGroup out{FiniteAbelianGroup(factors), {}, {}};

  out.gen_images.assign(m, std::vector<i64>(keep.size(), 0));
  for (size_t j = 0; j < m; ++j)
    for (size_t t = 0; t < keep.size(); ++t) {
      size_t i = keep[t];
      Integer v = s.U[i][j] % s.diag[i];
      if (v < 0) v += s.diag[i];
      out.gen_images[j][t] = static_cast<i64>(v);
    }

  if (!keep.empty()) {
    ZMat uinv = zmat_inverse_unimodular(s.U);
    out.canonical_lifts.assign(keep.size(), std::vector<Integer>(m));
    for (size_t t = 0; t < keep.size(); ++t)
      for (size_t j = 0; j < m; ++j) out.canonical_lifts[t][j] = uinv[j][keep[t]];
  }
  return out;
}

PresentedGroup group_from_presentation_ll(const std::vector<std::vector<i64>>& relations) {
  ZMat r(relations.size());
  for (size_t i = 0; i < relations.size(); ++i)
    r[i].assign(relations[i].begin(), relations[i].end());
  return group_from_presentation(r);
}

std::vector<FiniteAbelianGroup> abelian_groups_up_to(i64 max_order) {
  std::vector<FiniteAbelianGroup> out;
  out.emplace_back();
  std::vector<i64> chain;
  std::function<void(i64, i64)> rec = [&](i64 budget, i64 max_factor) {
    for (i64 n = 2; n <= std::min(budget, max_factor); ++n) {
      if (!chain.empty() && chain.back() % n != 0) continue;
      chain.push_back(n);
      out.emplace_back(chain);
      rec(budget / n, n);
      chain.pop_back();
    }
  };
  rec(max_order, max_order);
  return out;
}

} // namespace theta
