#pragma once

#include <vector>

#include "theta/cyclotomic.hpp"

namespace theta {

class GroupElement;
class DualElement;

// Finite abelian group in invariant-factor form (n_1, ..., n_r) with
// n_{i+1} | n_i and every n_i >= 2. The empty sequence is the trivial group.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<i64> factors);

  const std::vector<i64>& factors() const { return factors_; }
  size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  i64 exponent() const { return factors_.empty() ? 1 : factors_[0]; }
  Integer order() const;
  unsigned long long order_ull() const; // errc::invalid_argument if too large to enumerate

  GroupElement zero() const;
  GroupElement generator(size_t i) const;
  GroupElement element(std::vector<i64> coords) const;
  // Enumeration: coordinate 0 varies fastest.
  GroupElement element_at(unsigned long long index) const;
  unsigned long long index_of(const GroupElement& x) const;

  DualElement dual_zero() const;
  DualElement dual_generator(size_t i) const;
  DualElement dual_element(std::vector<i64> coords) const;
  DualElement dual_element_at(unsigned long long index) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return !(a == b);
  }

private:
  std::vector<i64> factors_;
};

class GroupElement {
public:
  GroupElement(FiniteAbelianGroup parent, std::vector<i64> coords);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<i64>& coords() const { return coords_; }
  bool is_zero() const;
  i64 order() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement scaled(i64 m) const;
  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b);

private:
  FiniteAbelianGroup parent_;
  std::vector<i64> coords_;
};

// Character x -> zeta_{n_1}^{sum_i coords[i] * x_i * (n_1/n_i)}.
class DualElement {
public:
  DualElement(FiniteAbelianGroup parent, std::vector<i64> coords);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<i64>& coords() const { return coords_; }
  bool is_zero() const;

  RootOfUnity eval(const GroupElement& x) const; // errc::parent_mismatch
  DualElement operator+(const DualElement& o) const;
  DualElement operator-() const;
  DualElement scaled(i64 m) const;
  friend bool operator==(const DualElement& a, const DualElement& b);
  friend bool operator!=(const DualElement& a, const DualElement& b) { return !(a == b); }

private:
  FiniteAbelianGroup parent_;
  std::vector<i64> coords_;
};

inline RootOfUnity eval_char(const DualElement& chi, const GroupElement& x) { return chi.eval(x); }

FiniteAbelianGroup dual_group(const FiniteAbelianGroup& g);

// Homomorphism determined by generator images: row j holds the coordinates
// of the image of the j-th source generator.
class GroupHom {
public:
  GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target,
           std::vector<std::vector<i64>> gen_images);

  static GroupHom identity(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& source() const { return source_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const std::vector<std::vector<i64>>& gen_images() const { return rows_; }

  GroupElement apply(const GroupElement& x) const;
  // (f.compose(g))(x) = f(g(x))
  GroupHom compose(const GroupHom& g) const;
  friend bool operator==(const GroupHom& a, const GroupHom& b);

private:
  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  std::vector<std::vector<i64>> rows_;
};

// U * A * V = diag; diagonal nonnegative with ascending divisibility.
struct SmithDecomposition {
  std::vector<std::vector<Integer>> U, V;
  std::vector<Integer> diag;
  size_t rank; // number of nonzero diagonal entries
};
SmithDecomposition smith_decompose(std::vector<std::vector<Integer>> a);

// Group presented as Z^m / (column span of `relations`), m = row count.
struct PresentedGroup {
  FiniteAbelianGroup group;
  // Presented generator j maps to the canonical-group element with these coords.
  std::vector<std::vector<i64>> gen_images;
  // Canonical generator t lifts to this integer combination of presented generators.
  std::vector<std::vector<Integer>> canonical_lifts;
};
PresentedGroup group_from_presentation(const std::vector<std::vector<Integer>>& relations);
PresentedGroup group_from_presentation_ll(const std::vector<std::vector<i64>>& relations);

// Inverse of a unimodular integer matrix (errc::internal_invariant otherwise).
std::vector<std::vector<Integer>> zmat_inverse_unimodular(
    const std::vector<std::vector<Integer>>& u);

// Every invariant-factor chain with order <= max_order, trivial group included.
std::vector<FiniteAbelianGroup> abelian_groups_up_to(i64 max_order);

std::vector<std::vector<Integer>> identity_zmatrix(size_t n);
std::vector<std::vector<Integer>> zmat_mul(const std::vector<std::vector<Integer>>& a,
                                           const std::vector<std::vector<Integer>>& b);

} // namespace theta
