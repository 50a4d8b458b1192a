#include "theta/selfdual.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace theta {

std::vector<FormBasisEntry> form_basis(int r) {
  SymplecticSpaceF2 sp(r);
  size_t n = 1u << r;
  std::vector<FormBasisEntry> out;
  out.reserve(sp.points());
  for (F2Vec x = 0; x < (1u << r); ++x)
    for (F2Vec xi = 0; xi < (1u << r); ++xi) {
      CycloMatrix gram(n, n, 4);
      for (F2Vec a = 0; a < n; ++a) {
        Rational v = SymplecticSpaceF2::dot(a, xi) ? Rational(-1) : Rational(1);
        gram.set(a, a ^ x, v);
      }
      out.push_back(FormBasisEntry{x, xi, SymplecticSpaceF2::dot(x, xi) == 0, std::move(gram)});
    }
  return out;
}

std::vector<std::vector<F2Vec>> sp_transvection_actions(int r) {
  SymplecticSpaceF2 sp(r);
  unsigned np = sp.points();
  std::vector<std::vector<F2Vec>> perms;
  perms.reserve(np - 1);
  for (F2Vec v = 1; v < np; ++v) {
    std::vector<F2Vec> perm(np);
    int qv = sp.q(v);
    for (F2Vec u = 0; u < np; ++u) {
      // lift of T_v moves chi_u to chi_{u + c v}, c = omega(u,v) + 1 + q(v)
      int c = (sp.omega(u, v) + 1 + qv) & 1;
      perm[u] = c ? (u ^ v) : u;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

std::vector<std::vector<F2Vec>> sp_proof_family_actions(int r) {
  SymplecticSpaceF2 sp(r);
  unsigned np = sp.points();
  std::vector<std::vector<F2Vec>> perms;

  // GL(K) transvections x_i += x_j acting as chi_{x,xi} -> chi_{gx, g^{-T}xi}
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      std::vector<F2Vec> perm(np);
      for (F2Vec u = 0; u < np; ++u) {
        F2Vec x = sp.xpart(u), xi = sp.xipart(u);
        F2Vec x2 = x ^ (((x >> j) & 1u) ? (1u << i) : 0u);
        F2Vec xi2 = xi ^ (((xi >> i) & 1u) ? (1u << j) : 0u);
        perm[u] = x2 | (xi2 << r);
      }
      perms.push_back(std::move(perm));
    }

  // Fourier swap chi_{x,xi} -> chi_{xi,x}
  {
    std::vector<F2Vec> perm(np);
    for (F2Vec u = 0; u < np; ++u) perm[u] = (sp.xipart(u)) | (sp.xpart(u) << r);
    perms.push_back(std::move(perm));
  }

  // u_q for the basis quadratic forms q = x_i x_j (i < j):
  // chi_{x,xi} -> chi_{x, xi + phi(x)}, phi(x) = x_j e_i + x_i e_j
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      std::vector<F2Vec> perm(np);
      for (F2Vec u = 0; u < np; ++u) {
        F2Vec x = sp.xpart(u), xi = sp.xipart(u);
        F2Vec phi = (((x >> j) & 1u) ? (1u << i) : 0u) ^ (((x >> i) & 1u) ? (1u << j) : 0u);
        perm[u] = x | ((xi ^ phi) << r);
      }
      perms.push_back(std::move(perm));
    }
  return perms;
}

namespace {

OrbitReport orbits_under(int r, const std::vector<std::vector<F2Vec>>& perms) {
  SymplecticSpaceF2 sp(r);
  unsigned np = sp.points();
  std::vector<int> orbit_id(np, -1);
  OrbitReport report;
  report.rank = r;
  for (F2Vec seed = 0; seed < np; ++seed) {
    if (orbit_id[seed] != -1) continue;
    int id = static_cast<int>(report.orbits.size());
    std::vector<F2Vec> stack{seed};
    orbit_id[seed] = id;
    std::vector<F2Vec> members;
    while (!stack.empty()) {
      F2Vec u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (const auto& p : perms) {
        F2Vec w = p[u];
        if (orbit_id[w] == -1) {
          orbit_id[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    report.orbits.push_back(OrbitReport::Orbit{members.size(), sp.is_symmetric(seed), members});
  }
  return report;
}

} // namespace

OrbitReport sp_orbits(int r) {
  if (r < 1) fail(errc::invalid_argument, "rank must be at least 1");
  if (r > 4) fail(errc::rank_too_large, "orbit enumeration supported for rank <= 4");
  return orbits_under(r, sp_transvection_actions(r));
}

std::uint64_t sp_group_order(int r) {
  std::uint64_t order = 1;
  for (int i = 1; i <= r; ++i) {
    order <<= (2 * i - 1);
    order *= (1ull << (2 * i)) - 1;
  }
  return order;
}

namespace {

// 2r x 2r bit matrix packed one row per byte (2r <= 8)
using BitMat = std::uint64_t;

std::uint8_t bm_row(BitMat m, int i) { return static_cast<std::uint8_t>(m >> (8 * i)); }

BitMat bm_identity(int n) {
  BitMat m = 0;
  for (int i = 0; i < n; ++i) m |= (1ull << i) << (8 * i);
  return m;
}

BitMat bm_mul(BitMat a, BitMat b, int n) {
  BitMat c = 0;
  for (int i = 0; i < n; ++i) {
    std::uint8_t row = bm_row(a, i), acc = 0;
    for (int k = 0; k < n; ++k)
      if ((row >> k) & 1) acc ^= bm_row(b, k);
    c |= static_cast<BitMat>(acc) << (8 * i);
  }
  return c;
}

} // namespace

std::uint64_t sp_generated_linear_order(int r) {
  if (r > 4) fail(errc::rank_too_large, "linear generation check supported for rank <= 4");
  SymplecticSpaceF2 sp(r);
  int n = 2 * r;
  unsigned np = sp.points();
  // linear part of T_v: w -> w + omega(w, v) v
  std::vector<BitMat> gens;
  for (F2Vec v = 1; v < np; ++v) {
    BitMat m = 0;
    for (int i = 0; i < n; ++i) {
      F2Vec w = 1u << i;
      F2Vec img = sp.omega(w, v) ? (w ^ v) : w;
      m |= static_cast<BitMat>(img) << (8 * i);
    }
    gens.push_back(m);
  }
  std::unordered_set<BitMat> seen;
  std::vector<BitMat> stack{bm_identity(n)};
  seen.insert(stack[0]);
  while (!stack.empty()) {
    BitMat m = stack.back();
    stack.pop_back();
    for (BitMat g : gens) {
      BitMat p = bm_mul(m, g, n);
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return seen.size();
}

std::vector<CycloMatrix> SelfDualThetaGroup::all_gens() const {
  std::vector<CycloMatrix> out = x_gens;
  out.insert(out.end(), xi_gens.begin(), xi_gens.end());
  return out;
}

InvariantForm invariant_form(const std::vector<CycloMatrix>& gens) {
  if (gens.empty()) fail(errc::invalid_argument, "no generators given");
  size_t n = gens[0].rows();
  i64 ord = 1;
  for (const auto& g : gens) ord = lcm_ll(ord, g.order());

  // T_g(B) = g^T B g acts on vec(B) as (g^T kron g^T); solve for the joint
  // fixed space.
  std::vector<CycloMatrix> stack;
  CycloMatrix id = CycloMatrix::identity(n * n, ord);
  for (const auto& g : gens) {
    CycloMatrix gt = g.lifted(ord).transpose();
    stack.push_back(gt.kronecker(gt) - id);
  }
  CycloMatrix ker = vstack(stack).kernel();
  if (ker.cols() == 0) fail(errc::no_invariant_form, "no invariant bilinear form");
  if (ker.cols() > 1)
    fail(errc::non_unique_invariant_form, "invariant form space has dimension > 1");

  CycloMatrix b(n, n, ker.order());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) b.set(i, j, ker.at(i * n + j, 0));
  if (b.rank() != n) fail(errc::no_invariant_form, "invariant form is degenerate");

  CycloMatrix bt = b.transpose();
  int sign;
  if (bt == b)
    sign = +1;
  else if (bt == -b)
    sign = -1;
  else
    fail(errc::internal_invariant, "invariant form is neither symmetric nor alternating");
  return InvariantForm{std::move(b), sign};
}

int classify_sign(const std::vector<CycloMatrix>& gens) { return invariant_form(gens).sign; }

SelfDualThetaGroup build_block(BlockKind kind) {
  CycloMatrix xg(2, 2, 4), cg(2, 2, 4);
  Cyclotomic i4 = Cyclotomic::from_root(RootOfUnity(4, 1), 4);
  if (kind == BlockKind::dihedral) {
    xg.set(0, 1, Rational(1));
    xg.set(1, 0, Rational(1));
    cg.set(0, 0, Rational(1));
    cg.set(1, 1, Rational(-1));
  } else {
    xg.set(0, 1, i4);
    xg.set(1, 0, i4);
    cg.set(0, 0, i4);
    cg.set(1, 1, -i4);
  }
  InvariantForm f = invariant_form({xg, cg});
  return SelfDualThetaGroup{1, f.sign, {xg}, {cg}, std::move(f.b)};
}

SelfDualThetaGroup central_product(const SelfDualThetaGroup& a, const SelfDualThetaGroup& b) {
  size_t na = a.form.rows(), nb = b.form.rows();
  CycloMatrix ia = CycloMatrix::identity(na, a.form.order());
  CycloMatrix ib = CycloMatrix::identity(nb, b.form.order());
  SelfDualThetaGroup out;
  out.rank = a.rank + b.rank;
  out.sign = a.sign * b.sign;
  for (const auto& g : a.x_gens) out.x_gens.push_back(g.kronecker(ib));
  for (const auto& g : b.x_gens) out.x_gens.push_back(ia.kronecker(g));
  for (const auto& g : a.xi_gens) out.xi_gens.push_back(g.kronecker(ib));
  for (const auto& g : b.xi_gens) out.xi_gens.push_back(ia.kronecker(g));
  out.form = a.form.kronecker(b.form);
  return out;
}

SelfDualThetaGroup conjugate(const SelfDualThetaGroup& g, const CycloMatrix& p) {
  CycloMatrix pinv = p.inverse();
  CycloMatrix pit = pinv.transpose();
  SelfDualThetaGroup out;
  out.rank = g.rank;
  out.sign = g.sign;
  for (const auto& m : g.x_gens) out.x_gens.push_back(p * m * pinv);
  for (const auto& m : g.xi_gens) out.xi_gens.push_back(p * m * pinv);
  out.form = pit * g.form * pinv;
  return out;
}

namespace {
std::string matrix_key(const CycloMatrix& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      for (const auto& c : m.at(i, j).coeffs()) os << rational_to_string(c) << ',';
      os << ';';
    }
  return os.str();
}
} // namespace

size_t generated_group_order(const std::vector<CycloMatrix>& gens, size_t cap) {
  if (gens.empty()) return 1;
  i64 ord = 1;
  for (const auto& g : gens) ord = lcm_ll(ord, g.order());
  std::vector<CycloMatrix> lifted;
  for (const auto& g : gens) lifted.push_back(g.lifted(ord));

  std::map<std::string, CycloMatrix> seen;
  CycloMatrix id = CycloMatrix::identity(gens[0].rows(), ord);
  seen.emplace(matrix_key(id), id);
  std::vector<CycloMatrix> stack{id};
  while (!stack.empty()) {
    CycloMatrix m = std::move(stack.back());
    stack.pop_back();
    for (const auto& g : lifted) {
      CycloMatrix p = m * g;
      auto key = matrix_key(p);
      if (!seen.count(key)) {
        seen.emplace(key, p);
        if (seen.size() > cap) return seen.size();
        stack.push_back(std::move(p));
      }
    }
  }
  return seen.size();
}

std::vector<std::vector<int>> projective_commutator_bits(const SelfDualThetaGroup& g) {
  std::vector<CycloMatrix> gens = g.all_gens();
  size_t n = gens.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      CycloMatrix lhs = gens[i] * gens[j];
      CycloMatrix rhs = gens[j] * gens[i];
      if (lhs == rhs)
        out[i][j] = 0;
      else if (lhs == -rhs)
        out[i][j] = 1;
      else
        fail(errc::internal_invariant, "generator commutator is not +-1");
    }
  return out;
}

EigenSplit eigen_split(const EigenSplitInput& input) {
  const auto& zs = input.center_gens;
  if (zs.empty()) fail(errc::invalid_argument, "need at least one center generator");
  if (input.beta.size() != zs.size())
    fail(errc::invalid_argument, "need one beta value per center generator");
  size_t dim = zs[0].rows();

  i64 ord = input.form.order();
  for (const auto& z : zs) ord = lcm_ll(ord, z.order());
  for (const auto& b : input.beta) ord = lcm_ll(ord, b.order());

  // semi-invariance: Z^T B Z = beta(Z)^{-1} B
  for (size_t k = 0; k < zs.size(); ++k) {
    CycloMatrix z = zs[k].lifted(ord);
    CycloMatrix expect =
        input.form.lifted(ord).scaled(Cyclotomic::from_root(input.beta[k].inverse(), ord));
    if (z.transpose() * input.form.lifted(ord) * z != expect)
      fail(errc::invalid_argument, "form is not semi-invariant with the given character");
  }

  // joint eigenspaces of the commuting center generators
  struct Space {
    CycloMatrix basis;
    std::vector<RootOfUnity> weights;
  };
  std::vector<Space> spaces{{CycloMatrix::identity(dim, ord), {}}};
  for (size_t k = 0; k < zs.size(); ++k) {
    // finite order modulo scalars: find p with Z^p scalar
    CycloMatrix z = zs[k].lifted(ord);
    CycloMatrix pow = z;
    i64 p = 1;
    std::optional<Cyclotomic> scalar;
    for (; p <= 256; ++p) {
      scalar = pow.scalar_value();
      if (scalar) break;
      pow = pow * z;
    }
    if (!scalar) fail(errc::invalid_argument, "center generator has no small scalar power");
    // identify scalar as a root of unity in mu_ord (possibly after lifting)
    RootOfUnity s = RootOfUnity::one(ord);
    bool found = false;
    for (i64 a = 0; a < ord; ++a)
      if (Cyclotomic::from_root(RootOfUnity(ord, a), ord) == *scalar) {
        s = RootOfUnity(ord, a);
        found = true;
        break;
      }
    if (!found) fail(errc::invalid_argument, "center scalar is not a root of unity in mu_ord");

    // lambda^p = s: lambda = zeta_{p ord}^{a + j ord}
    i64 field = lcm_ll(ord, p * s.order());
    std::vector<Space> next;
    for (auto& sp : spaces) {
      size_t covered = 0;
      for (i64 j = 0; j < p; ++j) {
        RootOfUnity lambda(p * ord, s.exponent() + j * ord);
        CycloMatrix op = z.lifted(field) - CycloMatrix::identity(dim, field).scaled(
                                               Cyclotomic::from_root(lambda, field));
        CycloMatrix sub = restrict_kernel(op, sp.basis.lifted(field));
        if (sub.cols() == 0) continue;
        covered += sub.cols();
        auto w = sp.weights;
        w.push_back(lambda);
        next.push_back(Space{sub, std::move(w)});
      }
      if (covered != sp.basis.cols())
        fail(errc::invalid_argument, "center generator is not diagonalizable over mu");
    }
    ord = field;
    spaces = std::move(next);
    for (auto& sp : spaces) sp.basis = sp.basis.lifted(ord);
  }

  // pair weights: partner of lambda is beta^{-1} lambda^{-1}
  auto partner_weights = [&](const std::vector<RootOfUnity>& w) {
    std::vector<RootOfUnity> out;
    for (size_t k = 0; k < w.size(); ++k) out.push_back(input.beta[k].inverse() * w[k].inverse());
    return out;
  };
  auto same_weights = [](const std::vector<RootOfUnity>& a, const std::vector<RootOfUnity>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  };

  CycloMatrix bform = input.form.lifted(ord);
  EigenSplit out;
  std::vector<bool> used(spaces.size(), false);
  for (size_t i = 0; i < spaces.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    auto partner = partner_weights(spaces[i].weights);
    if (same_weights(partner, spaces[i].weights)) {
      // self-paired: B restricted to the block must be non-degenerate
      CycloMatrix restr = spaces[i].basis.transpose() * bform * spaces[i].basis;
      if (restr.rank() != spaces[i].basis.cols())
        fail(errc::form_degenerate_on_block, "form degenerate on a self-paired block");
      out.blocks.push_back(EigenSplitBlock{false, {spaces[i].weights}, spaces[i].basis});
      continue;
    }
    size_t j = spaces.size();
    for (size_t t = i + 1; t < spaces.size(); ++t)
      if (!used[t] && same_weights(partner, spaces[t].weights)) {
        j = t;
        break;
      }
    if (j == spaces.size())
      fail(errc::form_degenerate_on_block, "missing hyperbolic partner weight space");
    used[j] = true;
    if (spaces[i].basis.cols() != spaces[j].basis.cols())
      fail(errc::form_degenerate_on_block, "hyperbolic partner dimensions differ");
    CycloMatrix cross = spaces[i].basis.transpose() * bform * spaces[j].basis;
    if (cross.rank() != spaces[i].basis.cols())
      fail(errc::form_degenerate_on_block, "form degenerate on a hyperbolic pair");

    size_t cols = spaces[i].basis.cols() + spaces[j].basis.cols();
    CycloMatrix joint(dim, cols, ord);
    for (size_t rr = 0; rr < dim; ++rr) {
      for (size_t c = 0; c < spaces[i].basis.cols(); ++c) joint.set(rr, c, spaces[i].basis.at(rr, c));
      for (size_t c = 0; c < spaces[j].basis.cols(); ++c)
        joint.set(rr, spaces[i].basis.cols() + c, spaces[j].basis.at(rr, c));
    }
    out.blocks.push_back(
        EigenSplitBlock{true, {spaces[i].weights, spaces[j].weights}, std::move(joint)});
  }

  // orthogonality across different blocks
  for (size_t i = 0; i < out.blocks.size(); ++i)
    for (size_t j = 0; j < out.blocks.size(); ++j) {
      if (i == j) continue;
      CycloMatrix cross = out.blocks[i].basis.transpose() * bform * out.blocks[j].basis;
      if (!cross.is_zero())
        fail(errc::internal_invariant, "blocks with non-paired weights are not orthogonal");
    }
  return out;
}

} // namespace theta
