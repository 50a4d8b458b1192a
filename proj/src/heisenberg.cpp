#include "theta/heisenberg.hpp"

#include <algorithm>

namespace theta {

ThetaElement theta_identity(const FiniteAbelianGroup& k, i64 scalar_order) {
  return ThetaElement{RootOfUnity::one(scalar_order), k.zero(), k.dual_zero()};
}

ThetaElement theta_mul(const ThetaElement& a, const ThetaElement& b) {
  if (a.x.parent() != b.x.parent())
    fail(errc::parent_mismatch, "theta elements over different groups");
  return ThetaElement{a.scalar * b.scalar * b.chi.eval(a.x), a.x + b.x, a.chi + b.chi};
}

ThetaElement theta_inv(const ThetaElement& a) {
  // (t,x,chi)^-1 = (t^-1 chi(x), -x, -chi)
  return ThetaElement{a.scalar.inverse() * a.chi.eval(a.x), -a.x, -a.chi};
}

bool theta_equal(const ThetaElement& a, const ThetaElement& b) {
  return a.scalar == b.scalar && a.x == b.x && a.chi == b.chi;
}

RootOfUnity theta_commutator(const ThetaElement& a, const ThetaElement& b) {
  ThetaElement c = theta_mul(theta_mul(a, b), theta_mul(theta_inv(a), theta_inv(b)));
  if (!c.x.is_zero() || !c.chi.is_zero())
    fail(errc::internal_invariant, "commutator is not central");
  return c.scalar;
}

GroupElement HeisenbergPairing::embed(const GroupElement& x, const DualElement& chi) const {
  if (x.parent() != k || chi.parent() != k)
    fail(errc::parent_mismatch, "embed expects elements of K");
  std::vector<i64> coords(h.rank(), 0);
  for (size_t i = 0; i < k.rank(); ++i) {
    coords[2 * i] = x.coords()[i];
    coords[2 * i + 1] = chi.coords()[i];
  }
  return h.element(std::move(coords));
}

std::pair<GroupElement, DualElement> HeisenbergPairing::split(const GroupElement& h_elt) const {
  if (h_elt.parent() != h) fail(errc::parent_mismatch, "split expects an element of H");
  std::vector<i64> xc(k.rank()), cc(k.rank());
  for (size_t i = 0; i < k.rank(); ++i) {
    xc[i] = h_elt.coords()[2 * i];
    cc[i] = h_elt.coords()[2 * i + 1];
  }
  return {k.element(std::move(xc)), k.dual_element(std::move(cc))};
}

HeisenbergPairing commutator_pairing(const FiniteAbelianGroup& k) {
  std::vector<i64> hf;
  for (i64 n : k.factors()) {
    hf.push_back(n);
    hf.push_back(n);
  }
  FiniteAbelianGroup h(hf);
  size_t r = h.rank();
  i64 n1 = h.exponent();
  std::vector<std::vector<i64>> mat(r, std::vector<i64>(r, 0));
  for (size_t i = 0; i < k.rank(); ++i) {
    // e((g_i,0),(0,chi_i)) = chi_i(g_i) = zeta_{n1}^{n1/m_i}
    i64 v = n1 / k.factors()[i];
    mat[2 * i][2 * i + 1] = v;
    mat[2 * i + 1][2 * i] = mod_ll(-v, n1);
  }
  return HeisenbergPairing{k, h, AlternatingPairing(h, std::move(mat))};
}

StandardRep::StandardRep(FiniteAbelianGroup k, i64 scalar_order) : k_(std::move(k)) {
  i64 base = k_.exponent();
  order_ = scalar_order == 0 ? base : lcm_ll(scalar_order, base);
  dim_ = static_cast<size_t>(k_.order_ull());
}

CycloMatrix StandardRep::matrix(const ThetaElement& g) const {
  if (g.x.parent() != k_) fail(errc::parent_mismatch, "theta element over a different K");
  i64 ord = lcm_ll(order_, g.scalar.order());
  CycloMatrix m(dim_, dim_, ord);
  Cyclotomic t = Cyclotomic::from_root(g.scalar, ord);
  // ((t,x,chi) f)(y) = t chi(y) f(x+y): delta_z -> t chi(z-x) delta_{z-x}
  for (size_t zi = 0; zi < dim_; ++zi) {
    GroupElement z = k_.element_at(zi);
    GroupElement row = z - g.x;
    Cyclotomic entry = t * Cyclotomic::from_root(g.chi.eval(row), ord);
    m.set(k_.index_of(row), zi, entry);
  }
  return m;
}

CycloMatrix StandardRep::matrix(const GroupElement& x, const DualElement& chi) const {
  return matrix(ThetaElement{RootOfUnity::one(order_), x, chi});
}

ThetaElement StandardRep::element(const RootOfUnity& t, const GroupElement& x,
                                  const DualElement& chi) const {
  return ThetaElement{t.lifted(lcm_ll(order_, t.order())), x, chi};
}

bool verify_irreducible(const std::vector<CycloMatrix>& matrices, size_t n) {
  return family_rank(matrices) == n * n;
}

bool verify_irreducible(const StandardRep& rep) {
  const FiniteAbelianGroup& k = rep.k();
  std::vector<CycloMatrix> fam;
  unsigned long long order = k.order_ull();
  for (unsigned long long xi = 0; xi < order; ++xi)
    for (unsigned long long ci = 0; ci < order; ++ci)
      fam.push_back(rep.matrix(k.element_at(xi), k.dual_element_at(ci)));
  return verify_irreducible(fam, rep.dimension());
}

const CycloMatrix& UhBasis::at(const GroupElement& h_elt) const {
  return u[hdata.h.index_of(h_elt)];
}

UhBasis uh_basis(const FiniteAbelianGroup& k, i64 scalar_order) {
  HeisenbergPairing hp = commutator_pairing(k);
  StandardRep rep(k, scalar_order);
  unsigned long long hsize = hp.h.order_ull();
  std::vector<CycloMatrix> u;
  u.reserve(hsize);
  for (unsigned long long i = 0; i < hsize; ++i) {
    auto [x, chi] = hp.split(hp.h.element_at(i));
    u.push_back(rep.matrix(x, chi));
  }
  return UhBasis{std::move(hp), std::move(rep), std::move(u)};
}

Weight1Rep::Weight1Rep(FiniteAbelianGroup k, i64 scalar_order, std::vector<CycloMatrix> a,
                       std::vector<CycloMatrix> b,
                       std::vector<std::pair<ThetaElement, CycloMatrix>> extra)
    : k_(std::move(k)), a_(std::move(a)), b_(std::move(b)), extra_(std::move(extra)) {
  order_ = lcm_ll(scalar_order == 0 ? 1 : scalar_order, k_.exponent());
  if (a_.size() != k_.rank() || b_.size() != k_.rank())
    fail(errc::invalid_argument, "need one matrix per generator of K and of its dual");
  dim_ = a_.empty() ? (b_.empty() ? 0 : b_[0].rows()) : a_[0].rows();
  if (dim_ == 0 && !extra_.empty()) dim_ = extra_[0].second.rows();
  for (auto* fam : {&a_, &b_})
    for (auto& m : *fam) {
      if (m.rows() != dim_ || m.cols() != dim_)
        fail(errc::invalid_argument, "generator matrices must be square of equal size");
      order_ = lcm_ll(order_, m.order());
    }
  for (auto& [elt, m] : extra_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      fail(errc::invalid_argument, "generator matrices must be square of equal size");
    order_ = lcm_ll(order_, lcm_ll(m.order(), elt.scalar.order()));
  }
  for (auto* fam : {&a_, &b_})
    for (auto& m : *fam) m = m.lifted(order_);
}

CycloMatrix Weight1Rep::rho(const ThetaElement& g) const {
  if (g.x.parent() != k_) fail(errc::parent_mismatch, "theta element over a different K");
  // (1,x,chi) = chi(x)^{-1} (1,x,0)(1,0,chi)
  i64 ord = lcm_ll(order_, g.scalar.order());
  CycloMatrix m = CycloMatrix::identity(dim_, ord);
  for (size_t i = 0; i < k_.rank(); ++i)
    for (i64 p = 0; p < g.x.coords()[i]; ++p) m = m * a_[i];
  for (size_t j = 0; j < k_.rank(); ++j)
    for (i64 p = 0; p < g.chi.coords()[j]; ++p) m = m * b_[j];
  RootOfUnity s = g.scalar * g.chi.eval(g.x).inverse();
  return m.scaled(Cyclotomic::from_root(s, ord));
}

void Weight1Rep::check() const {
  CycloMatrix id = CycloMatrix::identity(dim_, order_);
  auto power = [&](const CycloMatrix& m, i64 p) {
    CycloMatrix acc = id;
    for (i64 i = 0; i < p; ++i) acc = acc * m;
    return acc;
  };
  for (size_t i = 0; i < k_.rank(); ++i) {
    i64 mi = k_.factors()[i];
    if (power(a_[i], mi) != id)
      fail(errc::not_a_representation, "A_i^{m_i} != I");
    if (power(b_[i], mi) != id)
      fail(errc::not_a_representation, "B_i^{m_i} != I");
  }
  for (size_t i = 0; i < k_.rank(); ++i)
    for (size_t j = i + 1; j < k_.rank(); ++j) {
      if (a_[i] * a_[j] != a_[j] * a_[i])
        fail(errc::not_a_representation, "translation generators do not commute");
      if (b_[i] * b_[j] != b_[j] * b_[i])
        fail(errc::not_a_representation, "character generators do not commute");
    }
  for (size_t i = 0; i < k_.rank(); ++i)
    for (size_t j = 0; j < k_.rank(); ++j) {
      // A_i B_j = chi_j(g_i) B_j A_i
      RootOfUnity w = k_.dual_generator(j).eval(k_.generator(i));
      CycloMatrix rhs = (b_[j] * a_[i]).scaled(Cyclotomic::from_root(w, order_));
      if (a_[i] * b_[j] != rhs)
        fail(errc::not_a_representation, "Heisenberg commutation relation fails");
    }
  for (const auto& [elt, m] : extra_) {
    if (elt.x.is_zero() && elt.chi.is_zero()) {
      i64 ord = lcm_ll(order_, elt.scalar.order());
      CycloMatrix expect =
          CycloMatrix::identity(dim_, ord).scaled(Cyclotomic::from_root(elt.scalar, ord));
      if (m.lifted(ord) != expect)
        fail(errc::not_weight_one, "central element does not act by its scalar");
    } else if (rho(elt) != m.lifted(lcm_ll(order_, m.order()))) {
      fail(errc::not_a_representation, "extra assignment conflicts with the generated action");
    }
  }
}

Weight1Decomposition decompose_weight1(const Weight1Rep& rep) {
  rep.check();
  const FiniteAbelianGroup& k = rep.k();
  size_t dim = rep.dimension();
  unsigned long long ksize = k.order_ull();
  if (dim % ksize != 0)
    fail(errc::not_a_representation, "dimension is not a multiple of |K|");

  i64 ord = rep.scalar_order();
  CycloMatrix id = CycloMatrix::identity(dim, ord);

  // m = dim V^K
  CycloMatrix fixed = id; // basis of the K-fixed space, as columns
  if (k.rank() > 0) {
    std::vector<CycloMatrix> stack;
    for (size_t i = 0; i < k.rank(); ++i) stack.push_back(rep.a()[i] - id);
    fixed = vstack(stack).kernel();
  }
  size_t m = fixed.cols();
  if (m * ksize != dim)
    fail(errc::not_a_representation, "K-fixed space dimension does not match m |K| = dim");

  // w_{chi,k} = rho(1,0,chi) v_k; u_{x,k} = 1/|K| sum_chi chi(x)^{-1} w_{chi,k}
  std::vector<CycloMatrix> w;
  w.reserve(ksize);
  for (unsigned long long ci = 0; ci < ksize; ++ci) {
    DualElement chi = k.dual_element_at(ci);
    ThetaElement g{RootOfUnity::one(ord), k.zero(), chi};
    w.push_back(rep.rho(g) * fixed);
  }
  Rational inv_size(1, static_cast<long long>(ksize));
  CycloMatrix t(dim, dim, ord);
  for (unsigned long long xi = 0; xi < ksize; ++xi) {
    GroupElement x = k.element_at(xi);
    CycloMatrix u(dim, m, ord);
    for (unsigned long long ci = 0; ci < ksize; ++ci) {
      Cyclotomic coeff =
          Cyclotomic::from_root(k.dual_element_at(ci).eval(x).inverse(), ord) *
          Cyclotomic::from_rational(ord, inv_size);
      u = u + w[ci].scaled(coeff);
    }
    for (size_t row = 0; row < dim; ++row)
      for (size_t col = 0; col < m; ++col) t.set(row, xi * m + col, u.at(row, col));
  }

  if (t.rank() != dim)
    fail(errc::not_a_representation, "intertwiner is singular");

  // exact check against the standard representation
  StandardRep std_rep(k, ord);
  CycloMatrix im = CycloMatrix::identity(m, ord);
  for (size_t i = 0; i < k.rank(); ++i) {
    ThetaElement g{RootOfUnity::one(ord), k.generator(i), k.dual_zero()};
    if (rep.rho(g) * t != t * std_rep.matrix(g).kronecker(im))
      fail(errc::internal_invariant, "intertwiner fails on a translation generator");
  }
  for (size_t j = 0; j < k.rank(); ++j) {
    ThetaElement g{RootOfUnity::one(ord), k.zero(), k.dual_generator(j)};
    if (rep.rho(g) * t != t * std_rep.matrix(g).kronecker(im))
      fail(errc::internal_invariant, "intertwiner fails on a character generator");
  }
  return Weight1Decomposition{m, std::move(t)};
}

SplitResult split_if_trivial_pairing(const FiniteAbelianGroup& h, const AlternatingPairing& e,
                                     const std::vector<CycloMatrix>& gens_in) {
  if (e.group() != h) fail(errc::parent_mismatch, "pairing is not on H");
  if (gens_in.size() != h.rank())
    fail(errc::invalid_argument, "need one matrix per generator of H");

  i64 ord = h.exponent();
  for (const auto& g : gens_in) ord = lcm_ll(ord, g.order());
  std::vector<CycloMatrix> gens;
  for (const auto& g : gens_in) gens.push_back(g.lifted(ord));
  size_t r = h.rank();

  // scalar commutators must realize e
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      CycloMatrix lhs = gens[i] * gens[j];
      CycloMatrix rhs = (gens[j] * gens[i])
                            .scaled(Cyclotomic::from_root(e.value_on_generators(i, j).lifted(ord), ord));
      if (lhs != rhs)
        fail(errc::internal_invariant,
             "matrix commutators do not realize the given pairing");
    }

  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      if (!e.value_on_generators(i, j).is_one())
        return SplitRefusal{i, j, h.generator(i), h.generator(j), e.value_on_generators(i, j)};

  // e = 1: generators commute exactly; fix scalars so each has exact order m_i
  std::vector<RootOfUnity> twists;
  i64 lifted_ord = ord;
  for (size_t i = 0; i < r; ++i) {
    i64 mi = h.factors()[i];
    CycloMatrix p = CycloMatrix::identity(gens[i].rows(), ord);
    for (i64 q = 0; q < mi; ++q) p = p * gens[i];
    auto s = p.scalar_value();
    if (!s) fail(errc::internal_invariant, "generator power is not scalar");
    // identify the scalar as a root of unity in mu_ord
    bool found = false;
    RootOfUnity sroot = RootOfUnity::one(ord);
    for (i64 a2 = 0; a2 < ord; ++a2) {
      if (Cyclotomic::from_root(RootOfUnity(ord, a2), ord) == *s) {
        sroot = RootOfUnity(ord, a2);
        found = true;
        break;
      }
    }
    if (!found)
      fail(errc::invalid_argument, "generator power scalar is not a root of unity in mu_ord");
    RootOfUnity c = sroot.inverse().nth_root(mi);
    twists.push_back(c);
    lifted_ord = lcm_ll(lifted_ord, c.order());
  }

  size_t dim = gens.empty() ? 1 : gens[0].rows();
  std::vector<CycloMatrix> corrected;
  for (size_t i = 0; i < r; ++i)
    corrected.push_back(
        gens[i].lifted(lifted_ord).scaled(Cyclotomic::from_root(twists[i], lifted_ord)));

  // common eigenbasis by iterated eigenspace refinement
  struct Space {
    CycloMatrix basis;
    std::vector<RootOfUnity> weights;
  };
  std::vector<Space> spaces{{CycloMatrix::identity(dim, lifted_ord), {}}};
  for (size_t i = 0; i < r; ++i) {
    i64 mi = h.factors()[i];
    i64 field = lcm_ll(lifted_ord, mi);
    std::vector<Space> next;
    for (auto& sp : spaces) {
      size_t covered = 0;
      for (i64 t2 = 0; t2 < mi; ++t2) {
        RootOfUnity lambda(mi, t2);
        CycloMatrix op = corrected[i].lifted(field) -
                         CycloMatrix::identity(dim, field)
                             .scaled(Cyclotomic::from_root(lambda, field));
        CycloMatrix sub = restrict_kernel(op, sp.basis.lifted(field));
        if (sub.cols() == 0) continue;
        covered += sub.cols();
        auto weights = sp.weights;
        weights.push_back(lambda);
        next.push_back(Space{sub, std::move(weights)});
      }
      if (covered != sp.basis.cols())
        fail(errc::internal_invariant, "corrected generator is not diagonalizable over mu_m");
    }
    lifted_ord = field;
    spaces = std::move(next);
  }

  CycloMatrix basis(dim, dim, lifted_ord);
  std::vector<std::vector<RootOfUnity>> characters;
  size_t col = 0;
  for (const auto& sp : spaces)
    for (size_t c2 = 0; c2 < sp.basis.cols(); ++c2) {
      for (size_t row = 0; row < dim; ++row) basis.set(row, col, sp.basis.at(row, c2));
      characters.push_back(sp.weights);
      ++col;
    }
  if (col != dim || basis.rank() != dim)
    fail(errc::internal_invariant, "eigenbasis does not span the space");
  return LinearLift{std::move(twists), std::move(basis), std::move(characters)};
}

} // namespace theta
