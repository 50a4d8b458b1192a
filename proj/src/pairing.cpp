#include "theta/pairing.hpp"

#include <algorithm>
#include <set>

namespace theta {

AlternatingPairing::AlternatingPairing(FiniteAbelianGroup group,
                                       std::vector<std::vector<i64>> matrix)
    : group_(std::move(group)), mat_(std::move(matrix)) {
  size_t r = group_.rank();
  i64 n1 = group_.exponent();
  if (mat_.size() != r) fail(errc::invalid_argument, "pairing matrix has wrong row count");
  for (size_t i = 0; i < r; ++i) {
    if (mat_[i].size() != r) fail(errc::invalid_argument, "pairing matrix has wrong column count");
    for (size_t j = 0; j < r; ++j) mat_[i][j] = mod_ll(mat_[i][j], n1);
  }
  for (size_t i = 0; i < r; ++i) {
    if (mat_[i][i] != 0) fail(errc::invalid_argument, "pairing is not alternating on a generator");
    for (size_t j = 0; j < r; ++j) {
      if (mod_ll(mat_[i][j] + mat_[j][i], n1) != 0)
        fail(errc::invalid_argument, "pairing matrix is not antisymmetric");
      // value order must divide gcd(n_i, n_j): exactly well-definedness
      i64 g = gcd_ll(group_.factors()[i], group_.factors()[j]);
      if (mod_ll(mat_[i][j] * g, n1) != 0)
        fail(errc::invalid_argument, "pairing value order exceeds gcd of generator orders");
    }
  }
}

AlternatingPairing AlternatingPairing::trivial(const FiniteAbelianGroup& g) {
  return AlternatingPairing(g, std::vector<std::vector<i64>>(g.rank(), std::vector<i64>(g.rank(), 0)));
}

AlternatingPairing AlternatingPairing::standard(const FiniteAbelianGroup& g,
                                                std::vector<i64> twists) {
  size_t r = g.rank();
  if (r % 2 != 0) fail(errc::invalid_argument, "standard pairing needs an even number of factors");
  if (twists.empty()) twists.assign(r / 2, 1);
  if (twists.size() != r / 2) fail(errc::invalid_argument, "one twist per hyperbolic pair");
  i64 n1 = g.exponent();
  std::vector<std::vector<i64>> m(r, std::vector<i64>(r, 0));
  for (size_t i = 0; i + 1 < r; i += 2) {
    if (g.factors()[i] != g.factors()[i + 1])
      fail(errc::invalid_argument, "standard pairing needs equal factor pairs");
    i64 n = g.factors()[i];
    i64 v = mod_ll(twists[i / 2], n) * (n1 / n);
    m[i][i + 1] = v;
    m[i + 1][i] = mod_ll(-v, n1);
  }
  return AlternatingPairing(g, std::move(m));
}

RootOfUnity AlternatingPairing::value(const GroupElement& x, const GroupElement& y) const {
  if (x.parent() != group_ || y.parent() != group_)
    fail(errc::parent_mismatch, "pairing arguments from a different group");
  i64 n1 = group_.exponent();
  i64 e = 0;
  for (size_t i = 0; i < group_.rank(); ++i) {
    if (x.coords()[i] == 0) continue;
    for (size_t j = 0; j < group_.rank(); ++j) {
      if (mat_[i][j] == 0 || y.coords()[j] == 0) continue;
      e = mod_ll(e + x.coords()[i] % n1 * (mat_[i][j] * (y.coords()[j] % n1) % n1), n1);
    }
  }
  return RootOfUnity(n1, e);
}

RootOfUnity AlternatingPairing::value_on_generators(size_t i, size_t j) const {
  return RootOfUnity(group_.exponent(), mat_[i][j]);
}

bool AlternatingPairing::is_trivial() const {
  for (const auto& row : mat_)
    for (i64 v : row)
      if (v != 0) return false;
  return true;
}

Subgroup radical(const AlternatingPairing& e) {
  const FiniteAbelianGroup& h = e.group();
  size_t r = h.rank();
  if (r == 0) return Subgroup{h, FiniteAbelianGroup(), {}};
  i64 n1 = h.exponent();

  // x in radical iff (A^T x) = 0 mod n1. With U (A^T) V = S this reads
  // s_i y_i = 0 mod n1 for y = V^{-1} x, so L = V diag(n1/gcd(s_i, n1)) Z^r.
  std::vector<std::vector<Integer>> at(r, std::vector<Integer>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) at[i][j] = e.matrix()[j][i];
  SmithDecomposition s = smith_decompose(at);

  std::vector<Integer> t(r);
  for (size_t i = 0; i < r; ++i) {
    Integer si = i < s.diag.size() ? s.diag[i] : Integer(0);
    Integer g = boost::multiprecision::gcd(si, Integer(n1));
    t[i] = Integer(n1) / g;
  }
  // columns of B = V * diag(t) are a basis of L
  std::vector<std::vector<Integer>> b(r, std::vector<Integer>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) b[i][j] = s.V[i][j] * t[j];

  // L/D with D = diag(n_i): presented on the basis of L by C = B^{-1} diag(n)
  std::vector<std::vector<Rational>> binv_diag(r, std::vector<Rational>(r));
  {
    std::vector<std::vector<Rational>> aug(r, std::vector<Rational>(2 * r, Rational(0)));
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < r; ++j) aug[i][j] = Rational(b[i][j]);
      aug[i][r + i] = 1;
    }
    for (size_t col = 0, row = 0; col < r; ++col, ++row) {
      size_t p = row;
      while (p < r && aug[p][col] == 0) ++p;
      if (p == r) fail(errc::internal_invariant, "radical lattice basis is singular");
      std::swap(aug[p], aug[row]);
      Rational inv = 1 / aug[row][col];
      for (size_t j = col; j < 2 * r; ++j) aug[row][j] *= inv;
      for (size_t i2 = 0; i2 < r; ++i2) {
        if (i2 == row || aug[i2][col] == 0) continue;
        Rational f = aug[i2][col];
        for (size_t j = col; j < 2 * r; ++j) aug[i2][j] -= f * aug[row][j];
      }
    }
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        binv_diag[i][j] = aug[i][r + j] * Rational(h.factors()[j]);
  }
  std::vector<std::vector<Integer>> c(r, std::vector<Integer>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      if (boost::multiprecision::denominator(binv_diag[i][j]) != 1)
        fail(errc::internal_invariant, "diagonal lattice is not contained in the radical lattice");
      c[i][j] = boost::multiprecision::numerator(binv_diag[i][j]);
    }

  PresentedGroup quot = group_from_presentation(c);
  std::vector<GroupElement> gens;
  for (size_t tt = 0; tt < quot.group.rank(); ++tt) {
    std::vector<i64> coords(r, 0);
    for (size_t i = 0; i < r; ++i) {
      Integer v = 0;
      for (size_t j = 0; j < r; ++j) v += b[i][j] * quot.canonical_lifts[tt][j];
      Integer m = v % h.factors()[i];
      if (m < 0) m += h.factors()[i];
      coords[i] = static_cast<i64>(m);
    }
    gens.push_back(h.element(coords));
  }
  return Subgroup{h, quot.group, std::move(gens)};
}

bool is_nondegenerate(const AlternatingPairing& e) { return radical(e).is_trivial(); }

Integer homogeneous_index(const AlternatingPairing& e) {
  Subgroup rad = radical(e);
  Integer index = e.group().order() / rad.order();
  auto root = exact_sqrt(index);
  if (!root) fail(errc::internal_invariant, "[H : H_perp] is not a perfect square");
  return *root;
}

AlternatingPairing pairing_power(const AlternatingPairing& e, i64 m) {
  i64 n1 = e.group().exponent();
  auto mat = e.matrix();
  for (auto& row : mat)
    for (auto& v : row) v = mod_ll(v % n1 * mod_ll(m, n1), n1);
  return AlternatingPairing(e.group(), std::move(mat));
}

AlternatingPairing pairing_mul(const AlternatingPairing& a, const AlternatingPairing& b) {
  if (a.group() != b.group()) fail(errc::parent_mismatch, "pairings on different groups");
  i64 n1 = a.group().exponent();
  auto mat = a.matrix();
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat.size(); ++j) mat[i][j] = mod_ll(mat[i][j] + b.matrix()[i][j], n1);
  return AlternatingPairing(a.group(), std::move(mat));
}

NondegenerateQuotient nondegenerate_quotient(const AlternatingPairing& e) {
  const FiniteAbelianGroup& h = e.group();
  size_t r = h.rank();
  Subgroup rad = radical(e);

  // Presentation of H/H_perp: the diagonal relations plus the radical generators.
  std::vector<std::vector<Integer>> rel(r,
                                        std::vector<Integer>(r + rad.generators.size(), Integer(0)));
  for (size_t i = 0; i < r; ++i) rel[i][i] = h.factors()[i];
  for (size_t t = 0; t < rad.generators.size(); ++t)
    for (size_t i = 0; i < r; ++i) rel[i][r + t] = rad.generators[t].coords()[i];

  PresentedGroup pres = group_from_presentation(rel);
  FiniteAbelianGroup q = pres.group;

  GroupHom projection(h, q, pres.gen_images);
  std::vector<GroupElement> section;
  for (size_t t = 0; t < q.rank(); ++t) {
    std::vector<i64> coords(r, 0);
    for (size_t i = 0; i < r; ++i) {
      Integer m = pres.canonical_lifts[t][i] % h.factors()[i];
      if (m < 0) m += h.factors()[i];
      coords[i] = static_cast<i64>(m);
    }
    section.push_back(h.element(coords));
  }

  // induced pairing on canonical generators of Q
  i64 m1 = q.exponent();
  i64 n1 = h.exponent();
  std::vector<std::vector<i64>> mat(q.rank(), std::vector<i64>(q.rank(), 0));
  for (size_t s = 0; s < q.rank(); ++s)
    for (size_t t = 0; t < q.rank(); ++t) {
      RootOfUnity v = e.value(section[s], section[t]);
      i64 k = v.exponent();
      if (m1 == 1) {
        if (k != 0) fail(errc::internal_invariant, "induced pairing nontrivial on trivial quotient");
        continue;
      }
      if (k % (n1 / m1) != 0)
        fail(errc::internal_invariant, "induced pairing value does not live at quotient exponent");
      mat[s][t] = k / (n1 / m1);
    }
  AlternatingPairing qpairing(q, std::move(mat));
  return NondegenerateQuotient{q, qpairing, projection, section};
}

namespace {

// discrete log of `target` in the cyclic group generated by `base`
i64 pairing_dlog(const RootOfUnity& base, const RootOfUnity& target) {
  i64 mo = base.value_order();
  i64 n1 = base.order();
  i64 u = base.exponent() / (n1 / mo); // coprime to mo
  i64 k = target.lifted(n1).exponent();
  if (k % (n1 / mo) != 0)
    fail(errc::internal_invariant, "pairing value outside the cyclic group of the block");
  i64 kp = k / (n1 / mo);
  return mod_ll(mod_inverse(u, mo) * kp, mo);
}

// all elements of the subgroup generated by gens, sorted by coords
std::set<std::vector<i64>> subgroup_closure(const FiniteAbelianGroup& g,
                                            const std::vector<GroupElement>& gens) {
  std::set<std::vector<i64>> elems;
  elems.insert(g.zero().coords());
  for (const auto& gen : gens) {
    if (gen.is_zero()) continue;
    std::set<std::vector<i64>> next;
    i64 o = gen.order();
    for (const auto& c : elems) {
      GroupElement base = g.element(c);
      GroupElement cur = base;
      for (i64 j = 0; j < o; ++j) {
        next.insert(cur.coords());
        cur = cur + gen;
      }
    }
    elems = std::move(next);
  }
  return elems;
}

std::vector<NormalFormBlock> greedy_blocks(const AlternatingPairing& e) {
  const FiniteAbelianGroup& q = e.group();
  std::vector<NormalFormBlock> blocks;
  std::vector<GroupElement> gens;
  for (size_t i = 0; i < q.rank(); ++i) gens.push_back(q.generator(i));

  for (;;) {
    auto elems = subgroup_closure(q, gens);
    if (elems.size() <= 1) break;

    i64 max_order = 1;
    for (const auto& c : elems) max_order = std::max(max_order, q.element(c).order());

    // first element of maximal order, then first partner of full pairing order
    GroupElement x = q.zero();
    bool found_x = false;
    for (const auto& c : elems) {
      GroupElement cand = q.element(c);
      if (cand.order() == max_order) {
        x = cand;
        found_x = true;
        break;
      }
    }
    if (!found_x) fail(errc::internal_invariant, "no maximal-order element found");

    GroupElement y = q.zero();
    bool found_y = false;
    for (const auto& c : elems) {
      GroupElement cand = q.element(c);
      if (e.value(x, cand).value_order() == max_order) {
        y = cand;
        found_y = true;
        break;
      }
    }
    if (!found_y)
      fail(errc::internal_invariant, "pairing degenerate on the non-degenerate quotient");

    RootOfUnity exy = e.value(x, y);
    i64 n = max_order;
    i64 d = mod_ll(exy.exponent() / (q.exponent() / n), n);
    blocks.push_back(NormalFormBlock{n, d, x, y});

    // project generators to the orthogonal complement of <x, y>
    std::vector<GroupElement> next;
    for (const auto& g : gens) {
      i64 a = pairing_dlog(exy, e.value(g, y));
      i64 b = pairing_dlog(exy, e.value(x, g));
      next.push_back(g - x.scaled(a) - y.scaled(b));
    }
    gens = std::move(next);
  }
  return blocks;
}

} // namespace

NormalForm::NormalForm(AlternatingPairing input, std::vector<NormalFormBlock> blocks, Subgroup rad)
    : input_(std::move(input)), blocks_(std::move(blocks)), radical_(std::move(rad)) {
  // enumerate the radical once, tracking coefficients over its generators
  const FiniteAbelianGroup& h = input_.group();
  std::vector<i64> zero_coeffs(radical_.generators.size(), 0);
  radical_coords_[h.zero().coords()] = zero_coeffs;
  std::vector<std::vector<i64>> frontier{h.zero().coords()};
  for (size_t t = 0; t < radical_.generators.size(); ++t) {
    std::map<std::vector<i64>, std::vector<i64>> grown;
    i64 ft = radical_.group.factors()[t];
    for (const auto& [coords, coeffs] : radical_coords_) {
      GroupElement cur = h.element(coords);
      for (i64 j = 0; j < ft; ++j) {
        auto c2 = coeffs;
        c2[t] = j;
        grown.emplace((cur + radical_.generators[t].scaled(j)).coords(), c2);
      }
    }
    radical_coords_ = std::move(grown);
  }
}

std::vector<i64> NormalForm::block_orders() const {
  std::vector<i64> out;
  for (const auto& b : blocks_) out.push_back(b.n);
  return out;
}

std::vector<i64> NormalForm::twists() const {
  std::vector<i64> out;
  for (const auto& b : blocks_) out.push_back(b.d);
  return out;
}

NormalForm::Coordinates NormalForm::coordinates(const GroupElement& g) const {
  Coordinates c;
  GroupElement rest = g;
  i64 n1 = input_.group().exponent();
  for (const auto& b : blocks_) {
    i64 step = n1 / b.n;
    i64 ka = input_.value(g, b.y).exponent();
    i64 kb = input_.value(b.x, g).exponent();
    if (ka % step != 0 || kb % step != 0)
      fail(errc::internal_invariant, "pairing value outside the block's cyclic group");
    i64 dinv = mod_inverse(b.d, b.n);
    i64 a = mod_ll(dinv * (ka / step), b.n);
    i64 bb = mod_ll(dinv * (kb / step), b.n);
    c.block.emplace_back(a, bb);
    rest = rest - b.x.scaled(a) - b.y.scaled(bb);
  }
  auto it = radical_coords_.find(rest.coords());
  if (it == radical_coords_.end())
    fail(errc::internal_invariant, "element does not reduce into the radical");
  c.radical = it->second;
  return c;
}

GroupElement NormalForm::from_coordinates(const Coordinates& c) const {
  GroupElement out = input_.group().zero();
  for (size_t i = 0; i < blocks_.size(); ++i)
    out = out + blocks_[i].x.scaled(c.block[i].first) + blocks_[i].y.scaled(c.block[i].second);
  for (size_t t = 0; t < c.radical.size(); ++t)
    out = out + radical_.generators[t].scaled(c.radical[t]);
  return out;
}

RootOfUnity NormalForm::reconstruct(const GroupElement& g, const GroupElement& h) const {
  Coordinates cg = coordinates(g);
  Coordinates ch = coordinates(h);
  i64 n1 = input_.group().exponent();
  i64 e = 0;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    i64 cross = mod_ll(cg.block[i].first * ch.block[i].second -
                           ch.block[i].first * cg.block[i].second,
                       b.n);
    e = mod_ll(e + b.d * cross % b.n * (n1 / b.n), n1);
  }
  return RootOfUnity(n1, e);
}

bool NormalForm::round_trips() const {
  const FiniteAbelianGroup& h = input_.group();
  for (size_t i = 0; i < h.rank(); ++i)
    for (size_t j = 0; j < h.rank(); ++j)
      if (reconstruct(h.generator(i), h.generator(j)) != input_.value_on_generators(i, j))
        return false;
  return true;
}

std::vector<std::vector<i64>> NormalForm::basis_matrix() const {
  std::vector<std::vector<i64>> rows;
  for (const auto& b : blocks_) {
    rows.push_back(b.x.coords());
    rows.push_back(b.y.coords());
  }
  for (const auto& g : radical_.generators) rows.push_back(g.coords());
  return rows;
}

NormalForm mumford_normal_form(const AlternatingPairing& e, bool allow_degenerate) {
  Subgroup rad = radical(e);
  if (!rad.is_trivial() && !allow_degenerate)
    fail(errc::degenerate_input, "pairing has a nontrivial radical");

  NondegenerateQuotient nq = nondegenerate_quotient(e);
  std::vector<NormalFormBlock> qblocks = greedy_blocks(nq.pairing);

  // lift blocks through the section
  const FiniteAbelianGroup& h = e.group();
  std::vector<NormalFormBlock> blocks;
  for (const auto& b : qblocks) {
    GroupElement x = h.zero(), y = h.zero();
    for (size_t t = 0; t < nq.quotient.rank(); ++t) {
      x = x + nq.section[t].scaled(b.x.coords()[t]);
      y = y + nq.section[t].scaled(b.y.coords()[t]);
    }
    blocks.push_back(NormalFormBlock{b.n, b.d, x, y});
  }
  return NormalForm(e, std::move(blocks), std::move(rad));
}

AlternatingPairing random_pairing(const FiniteAbelianGroup& g, std::mt19937_64& rng) {
  size_t r = g.rank();
  i64 n1 = g.exponent();
  std::vector<std::vector<i64>> m(r, std::vector<i64>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) {
      i64 gij = gcd_ll(g.factors()[i], g.factors()[j]);
      i64 t = static_cast<i64>(rng() % static_cast<unsigned long long>(gij));
      m[i][j] = t * (n1 / gij);
      m[j][i] = mod_ll(-m[i][j], n1);
    }
  return AlternatingPairing(g, std::move(m));
}

FiniteAbelianGroup random_group(i64 max_order, std::mt19937_64& rng) {
  static std::vector<FiniteAbelianGroup> cache;
  static i64 cached_max = -1;
  if (cached_max != max_order) {
    cache = abelian_groups_up_to(max_order);
    cached_max = max_order;
  }
  return cache[rng() % cache.size()];
}

} // namespace theta
