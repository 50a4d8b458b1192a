#pragma once

#include <cstdint>
#include <vector>

#include "theta/heisenberg.hpp"

namespace theta {

// Points of H = K + K* over F_2 packed into a bitmask: low r bits the
// K-part, high r bits the K*-part.
using F2Vec = unsigned;

struct SymplecticSpaceF2 {
  int r;

  explicit SymplecticSpaceF2(int rank) : r(rank) {}
  unsigned points() const { return 1u << (2 * r); }
  F2Vec xpart(F2Vec v) const { return v & ((1u << r) - 1); }
  F2Vec xipart(F2Vec v) const { return v >> r; }
  static int dot(F2Vec a, F2Vec b) { return __builtin_popcount(a & b) & 1; }
  // omega((x,xi),(x',xi')) = <x,xi'> + <x',xi>
  int omega(F2Vec v, F2Vec w) const {
    return dot(xpart(v), xipart(w)) ^ dot(xpart(w), xipart(v));
  }
  // <x, xi> for v = (x, xi); 0 = symmetric character, 1 = alternating
  int q(F2Vec v) const { return dot(xpart(v), xipart(v)); }
  bool is_symmetric(F2Vec v) const { return q(v) == 0; }
};

struct AffineCharacter {
  int r;
  F2Vec x, xi;
  bool symmetric() const { return SymplecticSpaceF2::dot(x, xi) == 0; }
};

// B_{x,xi} = sum_y (-1)^{<y,xi>} eps_y (x) eps_{x+y} as a Gram matrix on
// O(F_2^r), delta basis indexed by bitmask.
struct FormBasisEntry {
  F2Vec x, xi;
  bool symmetric;
  CycloMatrix gram;
};
std::vector<FormBasisEntry> form_basis(int r);

struct OrbitReport {
  int rank;
  struct Orbit {
    size_t size;
    bool symmetric;
    std::vector<F2Vec> points;
  };
  std::vector<Orbit> orbits;
};
// Orbits of Sp_{2r}(F_2) acting on the characters of G_m-weight -2.
// errc::rank_too_large for r > 4.
OrbitReport sp_orbits(int r);

// Affine permutations of the character set induced by lifts of the
// symplectic transvections T_v, one per v != 0.
std::vector<std::vector<F2Vec>> sp_transvection_actions(int r);
// The three explicit families used in the two-orbit proof: GL(K)
// transvections, the Fourier swap, and the quadratic-form maps u_q.
std::vector<std::vector<F2Vec>> sp_proof_family_actions(int r);

std::uint64_t sp_group_order(int r);
// Order of the subgroup of Sp_{2r}(F_2) generated by the linear parts of
// sp_transvection_actions; BFS over bit matrices (intended for r <= 3).
std::uint64_t sp_generated_linear_order(int r);

enum class BlockKind { dihedral, quaternion };

struct SelfDualThetaGroup {
  int rank;
  int sign; // +1 symmetric, -1 alternating
  std::vector<CycloMatrix> x_gens, xi_gens;
  CycloMatrix form; // the invariant bilinear form B

  std::vector<CycloMatrix> all_gens() const;
};

struct InvariantForm {
  CycloMatrix b;
  int sign;
};
// Solves {B : g^T B g = B for all generators}; errors
// errc::no_invariant_form / errc::non_unique_invariant_form.
InvariantForm invariant_form(const std::vector<CycloMatrix>& gens);
int classify_sign(const std::vector<CycloMatrix>& gens);

SelfDualThetaGroup build_block(BlockKind kind);
SelfDualThetaGroup central_product(const SelfDualThetaGroup& a, const SelfDualThetaGroup& b);
SelfDualThetaGroup conjugate(const SelfDualThetaGroup& g, const CycloMatrix& p);

// Number of distinct matrices generated; stops past `cap`.
size_t generated_group_order(const std::vector<CycloMatrix>& gens, size_t cap);

// Scalar commutators of the generators (x-gens first, then xi-gens) as an
// F_2 matrix; equals [[0,I],[I,0]] exactly when the projective group
// carries the standard symplectic form.
std::vector<std::vector<int>> projective_commutator_bits(const SelfDualThetaGroup& g);

struct EigenSplitInput {
  std::vector<CycloMatrix> center_gens; // commuting, finite order mod scalars
  CycloMatrix form;                     // B, semi-invariant: Z^T B Z = beta(Z)^{-1} B
  std::vector<RootOfUnity> beta;        // beta(center_gens[k])
};
struct EigenSplitBlock {
  bool hyperbolic;
  // weight tuples of the constituent center eigenspaces (1 or 2 entries)
  std::vector<std::vector<RootOfUnity>> weights;
  CycloMatrix basis; // columns spanning the block (both halves for a pair)
};
struct EigenSplit {
  std::vector<EigenSplitBlock> blocks;
};
// errc::form_degenerate_on_block when B degenerates on a self-paired block
// or a hyperbolic partner is missing / mismatched.
EigenSplit eigen_split(const EigenSplitInput& input);

} // namespace theta
