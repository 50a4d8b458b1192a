#include "theta/brauer.hpp"

#include <algorithm>

namespace theta {

FiniteAbelianGroup AbelianVarietyModel::torsion_group() const {
  if (level <= 1) return FiniteAbelianGroup();
  return FiniteAbelianGroup(std::vector<i64>(2 * g, level));
}

AbelianVarietyModel AbelianVarietyModel::at_level(i64 m) const {
  AbelianVarietyModel out(*this);
  out.level = m;
  return out;
}

AbelianVarietyModel make_model(int g, i64 level,
                               std::vector<std::vector<std::vector<i64>>> ns) {
  if (g < 1) fail(errc::invalid_argument, "model dimension must be positive");
  if (level < 1) fail(errc::invalid_argument, "model level must be positive");
  size_t n = 2 * static_cast<size_t>(g);
  for (const auto& e : ns) {
    if (e.size() != n) fail(errc::invalid_argument, "NS generator must be 2g x 2g");
    for (size_t i = 0; i < n; ++i) {
      if (e[i].size() != n) fail(errc::invalid_argument, "NS generator must be 2g x 2g");
      if (e[i][i] != 0) fail(errc::invalid_argument, "NS generator must be alternating");
      for (size_t j = 0; j < n; ++j)
        if (e[i][j] != -e[j][i]) fail(errc::invalid_argument, "NS generator must be alternating");
    }
  }
  return AbelianVarietyModel{g, level, std::move(ns)};
}

size_t pairing_space_dim(int g) { return static_cast<size_t>(g) * (2 * g - 1); }

std::vector<i64> pairing_to_vec(const AlternatingPairing& e) {
  size_t n = e.group().rank();
  std::vector<i64> v;
  v.reserve(n * (n - 1) / 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) v.push_back(e.matrix()[i][j]);
  return v;
}

AlternatingPairing pairing_from_vec(int g, i64 n, const std::vector<i64>& v) {
  size_t r = 2 * static_cast<size_t>(g);
  if (v.size() != pairing_space_dim(g))
    fail(errc::invalid_argument, "pairing vector has wrong length");
  FiniteAbelianGroup group(std::vector<i64>(r, n));
  std::vector<std::vector<i64>> m(r, std::vector<i64>(r, 0));
  size_t k = 0;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) {
      m[i][j] = mod_ll(v[k], n);
      m[j][i] = mod_ll(-v[k], n);
      ++k;
    }
  return AlternatingPairing(group, std::move(m));
}

AlternatingPairing pairing_from_ns_matrix(const std::vector<std::vector<i64>>& e_mat, int g,
                                          i64 n) {
  size_t r = 2 * static_cast<size_t>(g);
  FiniteAbelianGroup group(std::vector<i64>(r, n));
  std::vector<std::vector<i64>> m(r, std::vector<i64>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) m[i][j] = mod_ll(e_mat[i][j], n);
  return AlternatingPairing(group, std::move(m));
}

namespace {

// columns: vec of each NS generator reduced mod level
std::vector<std::vector<Integer>> ns_generator_matrix(const AbelianVarietyModel& model) {
  size_t dim = pairing_space_dim(model.g);
  std::vector<std::vector<Integer>> gmat(dim, std::vector<Integer>(model.ns.size(), Integer(0)));
  for (size_t k = 0; k < model.ns.size(); ++k) {
    auto v = pairing_to_vec(pairing_from_ns_matrix(model.ns[k], model.g, model.level));
    for (size_t i = 0; i < dim; ++i) gmat[i][k] = v[i];
  }
  return gmat;
}

} // namespace

PhiImage phi_image(const AbelianVarietyModel& model) {
  size_t dim = pairing_space_dim(model.g);
  i64 n = model.level;
  PhiImage out{model.g, n, Integer(1), {}};
  for (const auto& e : model.ns)
    out.generators.push_back(pairing_from_ns_matrix(e, model.g, n));
  if (n == 1) return out;

  // |image| = n^dim / |coker([G | nI])|
  auto gmat = ns_generator_matrix(model);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) gmat[i].push_back(i == j ? Integer(n) : Integer(0));
  SmithDecomposition s = smith_decompose(gmat);
  Integer coker = 1;
  for (size_t i = 0; i < dim; ++i) coker *= s.diag[i];
  out.order = integer_pow(Integer(n), static_cast<i64>(dim)) / coker;
  return out;
}

BrauerGroupStructure brauer_group(const AbelianVarietyModel& model) {
  size_t dim = pairing_space_dim(model.g);
  i64 n = model.level;
  BrauerGroupStructure out{FiniteAbelianGroup(), Integer(1), {}};
  if (n == 1) return out;

  auto gmat = ns_generator_matrix(model);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) gmat[i].push_back(i == j ? Integer(n) : Integer(0));
  PresentedGroup pres = group_from_presentation(gmat);
  out.group = pres.group;
  out.phi_image_order = integer_pow(Integer(n), static_cast<i64>(dim)) / pres.group.order();
  for (size_t t = 0; t < pres.group.rank(); ++t) {
    std::vector<i64> vec(dim);
    for (size_t i = 0; i < dim; ++i) {
      Integer m = pres.canonical_lifts[t][i] % n;
      if (m < 0) m += n;
      vec[i] = static_cast<i64>(m);
    }
    out.coset_generators.push_back(pairing_from_vec(model.g, n, vec));
  }
  return out;
}

ProjectivizationResult is_projectivization(const AlternatingPairing& e_pm,
                                           const AbelianVarietyModel& model) {
  i64 m = e_pm.group().exponent();
  if (e_pm.group().is_trivial()) m = 1;
  size_t r = 2 * static_cast<size_t>(model.g);
  if (m == 1) return ProjectivizationResult{true, std::vector<i64>(model.ns.size(), 0), {}, 0};
  if (e_pm.group().rank() != r ||
      !std::all_of(e_pm.group().factors().begin(), e_pm.group().factors().end(),
                   [&](i64 f) { return f == m; }))
    fail(errc::invalid_argument, "pairing must live on (Z/m)^{2g}");

  AbelianVarietyModel level_m = model.at_level(m);
  size_t dim = pairing_space_dim(model.g);
  auto gmat = ns_generator_matrix(level_m);
  std::vector<i64> target = pairing_to_vec(e_pm);

  // solve G c = target mod m through U G V = S
  SmithDecomposition s = smith_decompose(gmat);
  size_t ncols = model.ns.size();
  std::vector<Integer> ub(dim, Integer(0));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) ub[i] += s.U[i][j] * target[j];

  std::vector<Integer> y(ncols, Integer(0));
  for (size_t i = 0; i < dim; ++i) {
    Integer si = i < s.diag.size() ? s.diag[i] : Integer(0);
    Integer gi = boost::multiprecision::gcd(si, Integer(m));
    Integer rem = ub[i] % gi;
    if (rem < 0) rem += gi;
    if (rem != 0) {
      // separating functional: w -> (m/gi) (U w)_i mod m kills the image
      ProjectivizationResult out;
      out.projectivization = false;
      Integer scale = Integer(m) / gi;
      out.separating_functional.resize(dim);
      for (size_t j = 0; j < dim; ++j) {
        Integer c = (scale * s.U[i][j]) % m;
        if (c < 0) c += m;
        out.separating_functional[j] = static_cast<i64>(c);
      }
      Integer val = (scale * ub[i]) % m;
      if (val < 0) val += m;
      out.separating_value = static_cast<i64>(val);
      if (out.separating_value == 0)
        fail(errc::internal_invariant, "separating functional vanishes on the target");
      return out;
    }
    if (i < ncols && si != 0) {
      // si/gi invertible mod m/gi
      Integer mi = Integer(m) / gi;
      if (mi > 1) {
        Integer sg = (si / gi) % mi;
        i64 inv = mod_inverse(static_cast<i64>(sg), static_cast<i64>(mi));
        Integer val = (Integer(inv) * ((ub[i] / gi) % mi)) % mi;
        if (val < 0) val += mi;
        y[i] = val;
      }
    }
  }
  std::vector<i64> cert(ncols, 0);
  for (size_t k = 0; k < ncols; ++k) {
    Integer c = 0;
    for (size_t j = 0; j < ncols; ++j) c += s.V[k][j] * y[j];
    c %= m;
    if (c < 0) c += m;
    cert[k] = static_cast<i64>(c);
  }
  // exact verification of the certificate
  std::vector<i64> check(dim, 0);
  for (size_t k = 0; k < ncols; ++k) {
    auto v = pairing_to_vec(pairing_from_ns_matrix(level_m.ns[k], model.g, m));
    for (size_t i = 0; i < dim; ++i) check[i] = mod_ll(check[i] + v[i] * cert[k], m);
  }
  for (size_t i = 0; i < dim; ++i)
    if (check[i] != mod_ll(target[i], m))
      fail(errc::internal_invariant, "certificate does not reproduce the pairing");
  return ProjectivizationResult{true, std::move(cert), {}, 0};
}

bool class_equal(const BrauerClass& a, const BrauerClass& b) {
  AlternatingPairing diff = pairing_mul(a.representative, pairing_power(b.representative, -1));
  return is_projectivization(diff, a.model).projectivization;
}

bool class_is_trivial(const BrauerClass& c) {
  return is_projectivization(c.representative, c.model).projectivization;
}

i64 class_order(const BrauerClass& c) {
  i64 n = c.model.level;
  for (i64 k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    if (is_projectivization(pairing_power(c.representative, k), c.model).projectivization)
      return k;
  }
  fail(errc::internal_invariant, "class order does not divide the level");
}

std::vector<std::pair<i64, i64>> cyclic_decomposition(const BrauerClass& c) {
  NormalForm nf = mumford_normal_form(c.representative);
  std::vector<std::pair<i64, i64>> out;
  for (const auto& b : nf.blocks()) out.emplace_back(b.n, b.d);
  return out;
}

CocycleAlgebra::CocycleAlgebra(const NormalForm& nf) : group_(nf.input().group()), nf_(nf) {
  if (!nf.radical().is_trivial())
    fail(errc::no_isotropic_splitting,
         "cocycle construction needs a non-degenerate pairing (maximal isotropic splitting)");
}

RootOfUnity CocycleAlgebra::cocycle(const GroupElement& s, const GroupElement& t) const {
  auto cs = nf_.coordinates(s);
  auto ct = nf_.coordinates(t);
  i64 n1 = group_.exponent();
  i64 e = 0;
  for (size_t i = 0; i < nf_.blocks().size(); ++i) {
    const auto& b = nf_.blocks()[i];
    // a((x,chi),(x',chi')) = chi'(x): block contribution d_i * a_i(s) * b_i(t)
    i64 term = mod_ll(b.d * cs.block[i].first % b.n * ct.block[i].second, b.n);
    e = mod_ll(e + term * (n1 / b.n), n1);
  }
  return RootOfUnity(n1, e);
}

RootOfUnity CocycleAlgebra::commutator(const GroupElement& s, const GroupElement& t) const {
  return cocycle(s, t) * cocycle(t, s).inverse();
}

bool CocycleAlgebra::check_cocycle_identity() const {
  unsigned long long n = group_.order_ull();
  std::vector<GroupElement> elems;
  elems.reserve(n);
  for (unsigned long long i = 0; i < n; ++i) elems.push_back(group_.element_at(i));
  // precompute block coordinates as exponent vectors
  std::vector<NormalForm::Coordinates> coords;
  coords.reserve(n);
  for (const auto& g : elems) coords.push_back(nf_.coordinates(g));
  i64 n1 = group_.exponent();
  auto coc = [&](size_t si, size_t ti) {
    i64 e = 0;
    for (size_t b = 0; b < nf_.blocks().size(); ++b) {
      i64 nb = nf_.blocks()[b].n;
      i64 term =
          mod_ll(nf_.blocks()[b].d * coords[si].block[b].first % nb * coords[ti].block[b].second,
                 nb);
      e = mod_ll(e + term * (n1 / nb), n1);
    }
    return e;
  };
  for (unsigned long long a = 0; a < n; ++a)
    for (unsigned long long b = 0; b < n; ++b) {
      GroupElement ab = elems[a] + elems[b];
      size_t abi = group_.index_of(ab);
      for (unsigned long long c = 0; c < n; ++c) {
        GroupElement bc = elems[b] + elems[c];
        size_t bci = group_.index_of(bc);
        // a(s,t) a(s+t,u) = a(t,u) a(s,t+u)
        if (mod_ll(coc(a, b) + coc(abi, c), n1) != mod_ll(coc(b, c) + coc(a, bci), n1))
          return false;
      }
    }
  return true;
}

bool CocycleAlgebra::check_associativity() const {
  // e_s e_t = a(s,t) e_{s+t}; associativity of the basis products is the
  // cocycle identity evaluated through the algebra.
  return check_cocycle_identity();
}

size_t CocycleAlgebra::center_dimension() const {
  unsigned long long n = group_.order_ull();
  size_t count = 0;
  for (unsigned long long i = 0; i < n; ++i) {
    GroupElement s = group_.element_at(i);
    bool central = true;
    for (size_t j = 0; j < group_.rank() && central; ++j)
      central = commutator(s, group_.generator(j)).is_one();
    if (central) ++count;
  }
  return count;
}

CocycleAlgebra standard_cocycle(const AlternatingPairing& e) {
  if (!is_nondegenerate(e))
    fail(errc::no_isotropic_splitting,
         "standard cocycle needs a non-degenerate pairing");
  return CocycleAlgebra(mumford_normal_form(e));
}

bool symmetric_product_obstruction(i64 g, i64 d) {
  if (g < 0) fail(errc::domain_error, "genus must be nonnegative");
  if (d <= 2 * g - 2) fail(errc::domain_error, "degree must exceed 2g - 2");
  Integer n = d - g + 1;
  return integer_pow(n, g) == falling_factorial(n, g);
}

} // namespace theta
