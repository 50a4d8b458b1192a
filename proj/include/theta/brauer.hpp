#pragma once

#include <vector>

#include "theta/pairing.hpp"

namespace theta {

// Desk model of an abelian variety: dimension g, level n, and a set of
// Neron-Severi generators as integral alternating 2g x 2g matrices. The
// n-torsion X_n is modeled as (Z/n)^{2g}.
struct AbelianVarietyModel {
  int g;
  i64 level;
  std::vector<std::vector<std::vector<i64>>> ns;

  FiniteAbelianGroup torsion_group() const;
  AbelianVarietyModel at_level(i64 m) const;
};
AbelianVarietyModel make_model(int g, i64 level,
                               std::vector<std::vector<std::vector<i64>>> ns);

// dim Hom(Lambda^2 X_n, mu_n) = g(2g-1)
size_t pairing_space_dim(int g);
// upper-triangle coordinates (i < j) of the pairing matrix
std::vector<i64> pairing_to_vec(const AlternatingPairing& e);
AlternatingPairing pairing_from_vec(int g, i64 n, const std::vector<i64>& v);
// phi(L): E mod n as a pairing on X_n
AlternatingPairing pairing_from_ns_matrix(const std::vector<std::vector<i64>>& e_mat, int g,
                                          i64 n);

struct PhiImage {
  int g;
  i64 level;
  Integer order;                               // size of the image subgroup
  std::vector<AlternatingPairing> generators;  // reductions of the NS generators
};
PhiImage phi_image(const AbelianVarietyModel& model);

struct BrauerGroupStructure {
  FiniteAbelianGroup group; // Hom(Lambda^2 X_n, mu_n) / phi-image
  Integer phi_image_order;
  std::vector<AlternatingPairing> coset_generators; // lifts of the canonical generators
};
BrauerGroupStructure brauer_group(const AbelianVarietyModel& model);

struct ProjectivizationResult {
  bool projectivization;
  // when true: NS coefficients c with sum c_k E_k = e mod m
  std::vector<i64> certificate;
  // when false: functional l on the pairing space with l(image) = 0 mod m
  // and l(e) != 0
  std::vector<i64> separating_functional;
  i64 separating_value = 0;
};
// e_Pm must live on (Z/m)^{2g}; the model is rebuilt at level m.
ProjectivizationResult is_projectivization(const AlternatingPairing& e_pm,
                                           const AbelianVarietyModel& model);

struct BrauerClass {
  AbelianVarietyModel model;
  AlternatingPairing representative;
};
bool class_equal(const BrauerClass& a, const BrauerClass& b);
bool class_is_trivial(const BrauerClass& c);
i64 class_order(const BrauerClass& c);
// cyclic-algebra descriptors (n_i, d_i) from the Mumford normal form of the
// representative's non-degenerate part
std::vector<std::pair<i64, i64>> cyclic_decomposition(const BrauerClass& c);

// Twisted group algebra over H = K + X(K) with the standard normalized
// cocycle a((x,chi),(x',chi')) = chi'(x), expressed in the block basis of a
// Mumford normal form.
class CocycleAlgebra {
public:
  explicit CocycleAlgebra(const NormalForm& nf); // errc::no_isotropic_splitting

  const FiniteAbelianGroup& group() const { return group_; }
  // a(s, t); elements of the ambient group H
  RootOfUnity cocycle(const GroupElement& s, const GroupElement& t) const;
  // a(s,t) a(t,s)^{-1}
  RootOfUnity commutator(const GroupElement& s, const GroupElement& t) const;

  bool check_cocycle_identity() const;  // exhaustive over H^3
  bool check_associativity() const;     // same triples through the e_s basis
  size_t center_dimension() const;

private:
  FiniteAbelianGroup group_;
  NormalForm nf_;
};
CocycleAlgebra standard_cocycle(const AlternatingPairing& e);

// n^g == n(n-1)...(n-g+1) with n = d-g+1; errc::domain_error for d <= 2g-2.
bool symmetric_product_obstruction(i64 g, i64 d);

} // namespace theta
