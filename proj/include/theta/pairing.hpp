#pragma once

#include <map>
#include <random>
#include <vector>

#include "theta/abelian.hpp"

namespace theta {

// Alternating bilinear pairing e : H x H -> mu_{exp(H)}, stored as the
// exponent matrix a with e(g_i, g_j) = zeta_{n_1}^{a[i][j]}. Construction
// checks alternation and that each value order divides gcd(n_i, n_j),
// which is exactly well-definedness of the bilinear extension.
class AlternatingPairing {
public:
  AlternatingPairing(FiniteAbelianGroup group, std::vector<std::vector<i64>> matrix);

  static AlternatingPairing trivial(const FiniteAbelianGroup& g);
  // Hyperbolic pairing on consecutive equal factor pairs (n,n,...): blocks
  // e(g_{2i}, g_{2i+1}) = zeta_{n_i}^{d_i}. Twists default to 1.
  static AlternatingPairing standard(const FiniteAbelianGroup& g, std::vector<i64> twists = {});

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::vector<i64>>& matrix() const { return mat_; }

  RootOfUnity value(const GroupElement& x, const GroupElement& y) const;
  RootOfUnity value_on_generators(size_t i, size_t j) const;
  bool is_trivial() const;

  friend bool operator==(const AlternatingPairing& a, const AlternatingPairing& b) {
    return a.group_ == b.group_ && a.mat_ == b.mat_;
  }
  friend bool operator!=(const AlternatingPairing& a, const AlternatingPairing& b) {
    return !(a == b);
  }

private:
  FiniteAbelianGroup group_;
  std::vector<std::vector<i64>> mat_;
};

struct Subgroup {
  FiniteAbelianGroup ambient;
  FiniteAbelianGroup group;              // abstract invariant factors
  std::vector<GroupElement> generators;  // in the ambient group, aligned with group.factors()
  Integer order() const { return group.order(); }
  bool is_trivial() const { return group.is_trivial(); }
};

Subgroup radical(const AlternatingPairing& e);
bool is_nondegenerate(const AlternatingPairing& e);
// sqrt([H : H_perp]); errc::internal_invariant if the index is not a square.
Integer homogeneous_index(const AlternatingPairing& e);

AlternatingPairing pairing_power(const AlternatingPairing& e, i64 m);
AlternatingPairing pairing_mul(const AlternatingPairing& a, const AlternatingPairing& b);

struct NondegenerateQuotient {
  FiniteAbelianGroup quotient;
  AlternatingPairing pairing;            // induced non-degenerate pairing
  GroupHom projection;                   // ambient -> quotient
  std::vector<GroupElement> section;     // lifts of the quotient's canonical generators
};
NondegenerateQuotient nondegenerate_quotient(const AlternatingPairing& e);

struct NormalFormBlock {
  i64 n; // block order
  i64 d; // twist, 1 <= d < n, gcd(d, n) = 1
  GroupElement x, y; // hyperbolic pair in the ambient group, e(x, y) = zeta_n^d
};

// Mumford decomposition of (H, e): hyperbolic blocks (Z/n_i)^2 with twisted
// standard pairings plus the radical. Blocks satisfy n_{i+1} | n_i.
class NormalForm {
public:
  struct Coordinates {
    std::vector<std::pair<i64, i64>> block; // (a_i, b_i) per block
    std::vector<i64> radical;               // coords over the radical generators
  };

  NormalForm(AlternatingPairing input, std::vector<NormalFormBlock> blocks, Subgroup rad);

  const AlternatingPairing& input() const { return input_; }
  const std::vector<NormalFormBlock>& blocks() const { return blocks_; }
  const Subgroup& radical() const { return radical_; }
  std::vector<i64> block_orders() const;
  std::vector<i64> twists() const;

  Coordinates coordinates(const GroupElement& g) const;
  GroupElement from_coordinates(const Coordinates& c) const;
  // Pairing value rebuilt from block data alone.
  RootOfUnity reconstruct(const GroupElement& g, const GroupElement& h) const;
  bool round_trips() const; // reconstruct == input on all generator pairs

  // Rows: x_1, y_1, ..., x_r, y_r, then radical generators (coords in H).
  std::vector<std::vector<i64>> basis_matrix() const;

private:
  AlternatingPairing input_;
  std::vector<NormalFormBlock> blocks_;
  Subgroup radical_;
  std::map<std::vector<i64>, std::vector<i64>> radical_coords_; // element -> coeffs
};

// errc::degenerate_input when the radical is nontrivial and
// allow_degenerate is false; otherwise the pairing is pushed to H/H_perp
// first and the blocks are lifted back through the section.
NormalForm mumford_normal_form(const AlternatingPairing& e, bool allow_degenerate = true);

AlternatingPairing random_pairing(const FiniteAbelianGroup& g, std::mt19937_64& rng);
FiniteAbelianGroup random_group(i64 max_order, std::mt19937_64& rng);

} // namespace theta
