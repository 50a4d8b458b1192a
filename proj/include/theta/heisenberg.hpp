#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "theta/matrix.hpp"
#include "theta/pairing.hpp"

namespace theta {

// Element (t, x, chi) of the Heisenberg group H(K) with scalars truncated
// to mu_M for a context order M (a multiple of exp(K)).
struct ThetaElement {
  RootOfUnity scalar;
  GroupElement x;
  DualElement chi;
};

ThetaElement theta_identity(const FiniteAbelianGroup& k, i64 scalar_order);
// (t,x,chi)(t',x',chi') = (t t' chi'(x), x+x', chi+chi')
ThetaElement theta_mul(const ThetaElement& a, const ThetaElement& b);
ThetaElement theta_inv(const ThetaElement& a);
bool theta_equal(const ThetaElement& a, const ThetaElement& b);
// scalar of a b a^-1 b^-1
RootOfUnity theta_commutator(const ThetaElement& a, const ThetaElement& b);

// H = K + X(K) in canonical form, with the commutator pairing
// e((x,chi),(x',chi')) = chi'(x) chi(x')^{-1}. Generators are interleaved
// (x_1, chi_1, x_2, chi_2, ...) so the invariant-factor chain is preserved.
struct HeisenbergPairing {
  FiniteAbelianGroup k;
  FiniteAbelianGroup h;
  AlternatingPairing pairing;

  GroupElement embed(const GroupElement& x, const DualElement& chi) const;
  std::pair<GroupElement, DualElement> split(const GroupElement& h_elt) const;
};
HeisenbergPairing commutator_pairing(const FiniteAbelianGroup& k);

// Schroedinger representation on O(K) in the delta basis (coordinate order).
class StandardRep {
public:
  explicit StandardRep(FiniteAbelianGroup k, i64 scalar_order = 0); // 0: use exp(K)

  const FiniteAbelianGroup& k() const { return k_; }
  size_t dimension() const { return dim_; }
  i64 scalar_order() const { return order_; }

  CycloMatrix matrix(const ThetaElement& g) const;
  CycloMatrix matrix(const GroupElement& x, const DualElement& chi) const; // scalar 1
  ThetaElement element(const RootOfUnity& t, const GroupElement& x, const DualElement& chi) const;

private:
  FiniteAbelianGroup k_;
  i64 order_; // cyclotomic order of all matrices
  size_t dim_;
};

// True iff the matrices span the full n x n matrix algebra.
bool verify_irreducible(const std::vector<CycloMatrix>& matrices, size_t n);
bool verify_irreducible(const StandardRep& rep);

// u_{x,chi} = rep(1, x, chi), indexed by the element (x,chi) of H.
struct UhBasis {
  HeisenbergPairing hdata;
  StandardRep rep;
  std::vector<CycloMatrix> u; // indexed by H element index

  const CycloMatrix& at(const GroupElement& h_elt) const;
};
UhBasis uh_basis(const FiniteAbelianGroup& k, i64 scalar_order = 0);

// Weight-1 representation given by matrices for the standard generators
// (1, g_i, 0) and (1, 0, chi_j); the scalars act by scalar multiplication.
// Optional extra assignments are validated against the generated action.
class Weight1Rep {
public:
  Weight1Rep(FiniteAbelianGroup k, i64 scalar_order, std::vector<CycloMatrix> a,
             std::vector<CycloMatrix> b,
             std::vector<std::pair<ThetaElement, CycloMatrix>> extra = {});

  const FiniteAbelianGroup& k() const { return k_; }
  i64 scalar_order() const { return order_; }
  size_t dimension() const { return dim_; }
  const std::vector<CycloMatrix>& a() const { return a_; }
  const std::vector<CycloMatrix>& b() const { return b_; }

  CycloMatrix rho(const ThetaElement& g) const;
  // errc::not_a_representation / errc::not_weight_one
  void check() const;

private:
  FiniteAbelianGroup k_;
  i64 order_;
  size_t dim_;
  std::vector<CycloMatrix> a_, b_;
  std::vector<std::pair<ThetaElement, CycloMatrix>> extra_;
};

struct Weight1Decomposition {
  size_t multiplicity; // m = dim V^K
  // T with rho_V(g) T = T (rho_W(g) kron I_m) for the standard generators.
  CycloMatrix intertwiner;
};
Weight1Decomposition decompose_weight1(const Weight1Rep& rep);

// Splitting data for a projective representation of H with trivial pairing:
// scalar corrections c_i per generator plus a simultaneous eigenbasis.
struct LinearLift {
  std::vector<RootOfUnity> scalar_twists;
  CycloMatrix basis; // columns: common eigenvectors of the corrected generators
  std::vector<std::vector<RootOfUnity>> characters; // per column, eigenvalue per generator
};
struct SplitRefusal {
  size_t i, j; // generator indices with e(g_i, g_j) != 1
  GroupElement x, y;
  RootOfUnity value;
};
using SplitResult = std::variant<LinearLift, SplitRefusal>;

// gens[i] is an invertible matrix representing the i-th generator of H
// projectively; their scalar commutators must equal the given pairing.
SplitResult split_if_trivial_pairing(const FiniteAbelianGroup& h, const AlternatingPairing& e,
                                     const std::vector<CycloMatrix>& gens);

} // namespace theta
