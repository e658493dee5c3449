#include "waring/constructor.hpp"

#include "waring/criteria.hpp"

#include <algorithm>
#include <random>

namespace waring {

namespace {

const RationalField kQ;

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n, long box) {
  std::uniform_int_distribution<long> d(-box, box);
  std::vector<Rational> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

FormQ random_form(std::mt19937_64& rng, int degree, long box) {
  return {degree, random_vector(rng, dim_graded(degree), box)};
}

bool generic_enough(const PointSet& a) {
  std::size_t r = a.size();
  return kruskal_rank(a, 1).k == std::min<std::size_t>(r, 5) && kruskal_rank(a, 2).k == std::min<std::size_t>(r, 15);
}

PointSet draw_points(std::mt19937_64& rng, std::size_t r) {
  std::vector<ProjectivePoint> pts;
  for (std::size_t i = 0; i < r; ++i) pts.emplace_back(random_vector(rng, kVars, kCoordinateBox));
  return PointSet(pts);
}

std::vector<FormP> reduce_all(const PrimeField& f, const std::vector<FormQ>& gs) {
  std::vector<FormP> out;
  for (const auto& g : gs) out.push_back(to_field(f, g));
  return out;
}

std::vector<long> hvector_of(const std::vector<std::size_t>& h) {
  auto dh = difference(h);
  while (!dh.empty() && dh.back() == 0) dh.pop_back();
  return dh;
}

// Hilbert function of R / (I_B) from its pieces.
std::vector<std::size_t> piece_hilbert(const std::vector<IdealPieceP>& pieces) {
  std::vector<std::size_t> h;
  for (const auto& p : pieces) h.push_back(dim_graded(p.degree) - p.dim());
  return h;
}

bool orthogonal(const PrimeField& f, const FormQ& t, const IdealPieceP& piece) {
  auto w = apolar_functional(f, to_field(f, t));
  for (const auto& b : piece.space.basis) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s = f.add(s, f.mul(w[i], b[i]));
    if (s != 0) return false;
  }
  return true;
}

// Fills the B-side bookkeeping shared by both witness constructions; false if a check fails.
bool finish_witness(WitnessInstance& out, const PrimeField& f, const CompleteIntersection& ci,
                    const std::vector<FormP>& link_gens, const std::vector<long>& expected_b,
                    const std::vector<long>& expected_z) {
  const auto& a = out.decomposition.points;
  out.b_pieces = residue_points_ideal(f, ci, link_gens, 5);
  out.b_hvector = hvector_of(piece_hilbert(out.b_pieces));
  if (out.b_hvector != expected_b) return false;
  std::vector<IdealPieceP> low(out.b_pieces.begin(), out.b_pieces.begin() + 5);
  out.b_generators = minimal_generators(f, low);
  out.z_hilbert = union_hilbert(f, a, out.b_pieces);
  if (hvector_of(out.z_hilbert) != expected_z) return false;
  auto ia4 = ideal_piece(f, a, 4);
  out.u_codimension = dim_graded(4) - subspace_sum(f, ia4.space, out.b_pieces[4].space).dim();
  if (out.u_codimension != 1) return false;
  return orthogonal(f, out.decomposition.form(), out.b_pieces[4]);
}

FormQ det3(const std::vector<std::vector<FormQ>>& m) {
  auto term = [&](int i, int j, int k) { return multiply(kQ, multiply(kQ, m[0][i], m[1][j]), m[2][k]); };
  auto s = term(0, 1, 2);
  s = add(kQ, s, term(1, 2, 0));
  s = add(kQ, s, term(2, 0, 1));
  auto neg = add(kQ, add(kQ, term(2, 1, 0), term(0, 2, 1)), term(1, 0, 2));
  return add(kQ, s, scale(kQ, Rational(-1), neg));
}

// Writes g = c_0 h_0 + ... + c_k h_k with c_i of degree deg g - deg h_i; nullopt if g is not in the ideal.
std::optional<std::vector<FormQ>> express(const FormQ& g, const std::vector<FormQ>& hs) {
  MatQ m(dim_graded(g.degree), 0);
  std::vector<std::size_t> sizes;
  for (const auto& h : hs) {
    int e = g.degree - h.degree;
    auto mm = multiplication_matrix(kQ, h, e);
    sizes.push_back(mm.cols());
    MatQ grown(m.rows(), m.cols() + mm.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) grown(i, j) = m(i, j);
      for (std::size_t j = 0; j < mm.cols(); ++j) grown(i, m.cols() + j) = mm(i, j);
    }
    m = std::move(grown);
  }
  auto x = solve(kQ, m, g.coeffs);
  if (!x) return std::nullopt;
  std::vector<FormQ> out;
  std::size_t o = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    out.push_back({g.degree - hs[i].degree, std::vector<Rational>(x->begin() + o, x->begin() + o + sizes[i])});
    o += sizes[i];
  }
  return out;
}

// Cubics through five random points of P^2: a rational parametrization of a quartic del Pezzo surface in P^4.
std::vector<FormQ> del_pezzo_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<std::vector<Rational>> base = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  base.push_back({Rational(d(rng)), Rational(d(rng)), Rational(d(rng))});
  MatQ m(5, 10);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& u = base[i];
    std::size_t j = 0;
    for (int a = 3; a >= 0; --a)
      for (int b = 3 - a; b >= 0; --b) {
        Rational v = 1;
        for (int k = 0; k < a; ++k) v *= u[0];
        for (int k = 0; k < b; ++k) v *= u[1];
        for (int k = 0; k < 3 - a - b; ++k) v *= u[2];
        m(i, j++) = v;
      }
  }
  auto ker = kernel(kQ, m);
  // random small change of basis of the linear system
  std::uniform_int_distribution<long> c(-2, 2);
  std::vector<FormQ> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    VecQ v(10, 0);
    for (const auto& b : ker.basis) {
      Rational t = c(rng);
      for (std::size_t j = 0; j < 10; ++j) v[j] += t * b[j];
    }
    auto ints = primitive_integer_row(v);
    out.push_back({3, std::vector<Rational>(ints.begin(), ints.end())});
  }
  MatQ check(out.size(), 10);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < 10; ++j) check(i, j) = out[i].coeffs[j];
  if (rank(kQ, check) != out.size()) return {};
  return out;
}

std::optional<std::vector<Rational>> del_pezzo_point(const std::vector<FormQ>& phi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-12, 12);
  std::vector<Rational> u = {Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
  std::vector<Rational> p;
  for (const auto& c : phi) {
    Rational v = 0;
    std::size_t j = 0;
    for (int a = 3; a >= 0; --a)
      for (int b = 3 - a; b >= 0; --b) {
        Rational t = c.coeffs[j++];
        for (int k = 0; k < a; ++k) t *= u[0];
        for (int k = 0; k < b; ++k) t *= u[1];
        for (int k = 0; k < 3 - a - b; ++k) t *= u[2];
        v += t;
      }
    p.push_back(v);
  }
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; })) return std::nullopt;
  auto ints = primitive_integer_row(p);
  return std::vector<Rational>(ints.begin(), ints.end());
}

}  // namespace

PointSet random_points(std::size_t r, std::uint64_t seed, int budget) {
  if (r < 1 || r > 21) throw std::invalid_argument("random_points supports 1 <= r <= 21");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    auto a = draw_points(rng, r);
    if (generic_enough(a)) return a;
  }
  throw GenerationError("no generic point set within the retry budget");
}

Decomposition random_decomposition(std::size_t r, std::uint64_t seed) {
  auto a = random_points(r, seed);
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::uniform_int_distribution<long> d(1, 9);
  std::vector<Rational> w;
  for (std::size_t i = 0; i < r; ++i) w.emplace_back((rng() & 1 ? 1 : -1) * d(rng));
  return Decomposition(a, w);
}

std::vector<std::size_t> union_hilbert(const PrimeField& f, const PointSet& a, const std::vector<IdealPieceP>& b_pieces) {
  std::vector<std::size_t> h;
  for (const auto& piece : b_pieces) {
    auto ia = ideal_piece(f, a, piece.degree);
    h.push_back(dim_graded(piece.degree) - subspace_intersect(f, ia.space, piece.space).dim());
  }
  return h;
}

WitnessInstance make_nonidentifiable_12(std::uint64_t seed, int budget) {
  const PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    auto a = random_points(12, rng());
    std::vector<FormQ> quadrics, cubics;
    try {
      residue_base_q(a, quadrics, cubics);
    } catch (const LiftingError&) {
      continue;
    }
    std::uniform_int_distribution<long> d(-5, 5);
    std::vector<Integer> lambda(8);
    auto cubic = zero_form(kQ, 3);
    for (std::size_t k = 0; k < 8; ++k) {
      lambda[k] = d(rng);
      cubic = add(kQ, cubic, scale(kQ, Rational(lambda[k]), cubics[k]));
    }
    if (is_zero(kQ, cubic)) continue;
    auto link = quadrics;
    link.push_back(cubic);
    auto link_p = reduce_all(f, link);
    CompleteIntersection ci;
    try {
      ci = certify_ci(f, link_p);
    } catch (const NotProper&) {
      continue;
    }
    if (!reducedness_certificate(f, link_p).reduced) continue;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < a.size(); ++i) w.push_back(euler_jacobi_weight(link, a[i].raw()));
    WitnessInstance out;
    out.decomposition = Decomposition(a, w);
    out.prime = f.modulus();
    out.linking = link;
    out.seed = seed;
    out.attempts = attempt;
    out.lambda = lambda;
    auto a_gens = reduce_all(f, quadrics);
    auto c_p = reduce_all(f, cubics);
    a_gens.insert(a_gens.end(), c_p.begin(), c_p.end());
    if (!finish_witness(out, f, ci, a_gens, {1, 4, 7}, {1, 4, 7, 7, 4, 1})) continue;
    return out;
  }
  throw GenerationError("non-identifiable r = 12 construction failed within the retry budget");
}

WitnessInstance make_nonidentifiable_13(std::uint64_t seed, int budget) {
  const PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    // A and Z' = {p1, p2} on a random quartic del Pezzo surface S
    auto phi = del_pezzo_map(rng);
    if (phi.size() != kVars) continue;
    std::vector<ProjectivePoint> pts;
    std::optional<std::vector<Rational>> p1, p2;
    for (int tries = 0; tries < 200 && pts.size() < 13; ++tries) {
      auto p = del_pezzo_point(phi, rng);
      if (p && std::all_of(p->begin(), p->end(), [](const Rational& x) { return abs(x) <= kCoordinateBox; }))
        pts.emplace_back(*p);
    }
    p1 = del_pezzo_point(phi, rng);
    p2 = del_pezzo_point(phi, rng);
    if (pts.size() != 13 || !p1 || !p2) continue;
    PointSet a;
    try {
      a = PointSet(pts);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!generic_enough(a)) continue;
    auto i2 = ideal_piece(kQ, a, 2);
    if (i2.dim() != 2) continue;
    std::vector<FormQ> quadrics;
    for (const auto& v : i2.space.basis) {
      auto ints = primitive_integer_row(v);
      quadrics.push_back({2, std::vector<Rational>(ints.begin(), ints.end())});
    }
    bool fresh = true;
    for (const auto& p : {*p1, *p2})
      for (std::size_t i = 0; i < a.size(); ++i) fresh = fresh && !(ProjectivePoint(p) == a[i]);
    if (!fresh) continue;
    MatQ pm = MatQ::from_rows({*p1, *p2}, kVars);
    if (rank(kQ, pm) != 2) continue;
    auto line = kernel(kQ, pm);
    std::vector<FormQ> lin;
    for (const auto& v : line.basis) lin.push_back(linear_form(kQ, v));
    auto c = random_vector(rng, 3, 5);
    auto lambda_form = zero_form(kQ, 1);
    for (int i = 0; i < 3; ++i) lambda_form = add(kQ, lambda_form, scale(kQ, c[i], lin[i]));
    // l1, l2 complete Lambda to the linear forms vanishing on the line p1 p2
    std::vector<FormQ> ls;
    for (int i = 0; i < 3 && ls.size() < 2; ++i) {
      std::vector<VecQ> rows = {lambda_form.coeffs};
      for (const auto& l : ls) rows.push_back(l.coeffs);
      rows.push_back(lin[i].coeffs);
      if (rank(kQ, MatQ::from_rows(rows, kVars)) == rows.size()) ls.push_back(lin[i]);
    }
    if (ls.size() != 2) continue;
    bool off = true;
    for (std::size_t i = 0; i < a.size(); ++i) off = off && evaluate(kQ, lambda_form, a[i].raw()) != 0;
    if (!off) continue;

    // Z' = {p1, p2} = CI(Lambda, l1, l2, q) with q = m1 m2, m_i vanishing at one point only
    auto through = [&](const std::vector<Rational>& p, const std::vector<Rational>& other) -> std::optional<FormQ> {
      auto k = kernel(kQ, MatQ::from_rows({p}, kVars));
      auto g = zero_form(kQ, 1);
      auto cs = random_vector(rng, k.dim(), 9);
      for (std::size_t i = 0; i < k.dim(); ++i) g = add(kQ, g, scale(kQ, cs[i], FormQ{1, k.basis[i]}));
      if (evaluate(kQ, g, other) == 0) return std::nullopt;
      return g;
    };
    auto m1 = through(*p1, *p2);
    auto m2 = through(*p2, *p1);
    if (!m1 || !m2) continue;
    auto q = multiply(kQ, *m1, *m2);

    // W: residue of Z' in CI(Lambda, Q1, Q2, K); I_W = (Lambda, Q1, Q2, K, det M)
    auto s1 = random_form(rng, 2, 5), s2 = random_form(rng, 2, 5);
    auto t3 = random_form(rng, 1, 5);
    auto k_cubic = add(kQ, add(kQ, multiply(kQ, ls[0], s1), multiply(kQ, ls[1], s2)), multiply(kQ, q, t3));
    std::vector<std::vector<FormQ>> m;
    bool expressed = true;
    for (const auto& qi : quadrics) {
      auto e = express(qi, {lambda_form, ls[0], ls[1], q});
      if (!e) {
        expressed = false;
        break;
      }
      m.push_back({(*e)[1], (*e)[2], (*e)[3]});
    }
    if (!expressed) continue;
    m.push_back({s1, s2, t3});
    auto det_m = det3(m);
    std::vector<FormQ> w_gens = {lambda_form, quadrics[0], quadrics[1], k_cubic, det_m};
    auto w_p = reduce_all(f, w_gens);
    std::vector<std::size_t> w_hilbert;
    std::vector<IdealPieceP> aw_pieces;
    std::vector<std::size_t> aw_hilbert;
    for (int e = 0; e <= 4; ++e) {
      IdealPieceP wp{e, {dim_graded(e), {}, {}}};
      if (e >= 1) wp = generated_piece(f, std::vector<FormP>(w_p.begin(), w_p.begin() + (e >= 3 ? 5 : e == 2 ? 3 : 1)), e);
      w_hilbert.push_back(dim_graded(e) - wp.dim());
      IdealPieceP both{e, subspace_intersect(f, ideal_piece(f, a, e).space, wp.space)};
      aw_hilbert.push_back(dim_graded(e) - both.dim());
      aw_pieces.push_back(std::move(both));
    }
    if (w_hilbert != std::vector<std::size_t>{1, 4, 8, 10, 10}) continue;
    if (aw_hilbert != std::vector<std::size_t>{1, 5, 13, 23, 23}) continue;

    // lift K and det M to cubics through A as well: add Lambda * (quadric)
    auto lift = [&](const FormQ& g) -> std::optional<FormQ> {
      MatQ mat(a.size(), dim_graded(2));
      VecQ rhs(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto lv = evaluate(kQ, lambda_form, a[i].raw());
        auto row = monomial_values(kQ, a[i].raw(), 2);
        for (std::size_t j = 0; j < row.size(); ++j) mat(i, j) = lv * row[j];
        rhs[i] = -evaluate(kQ, g, a[i].raw());
      }
      auto x = solve(kQ, mat, rhs);
      if (!x) return std::nullopt;
      return add(kQ, g, multiply(kQ, lambda_form, FormQ{2, *x}));
    };
    auto k_lift = lift(k_cubic), d_lift = lift(det_m);
    if (!k_lift || !d_lift) continue;

    // link A u W by CI(Q1, Q2, G1, G2)
    auto g1 = *k_lift, g2 = *d_lift;
    g2 = add(kQ, g2, scale(kQ, Rational(static_cast<long>(rng() % 7) - 3), g1));
    for (const auto& qi : quadrics)
      for (int j = 0; j < kVars; ++j) {
        auto c1 = random_vector(rng, 2, 3);
        auto xq = multiply(kQ, qi, variable(kQ, j));
        g1 = add(kQ, g1, scale(kQ, c1[0], xq));
        g2 = add(kQ, g2, scale(kQ, c1[1], xq));
      }
    std::vector<FormQ> link = {quadrics[0], quadrics[1], g1, g2};
    auto link_p = reduce_all(f, link);
    bool inside = true;
    for (const auto& g : {link_p[2], link_p[3]}) inside = inside && contains(f, aw_pieces[3].space, g.coeffs);
    if (!inside) continue;
    CompleteIntersection ci;
    try {
      ci = certify_ci(f, link_p);
    } catch (const NotProper&) {
      continue;
    }
    if (!reducedness_certificate(f, link_p).reduced) continue;

    // Euler-Jacobi with the quintic Lambda * h, which vanishes on W
    std::vector<Rational> w;
    for (std::size_t i = 0; i < a.size(); ++i)
      w.push_back(evaluate(kQ, lambda_form, a[i].raw()) * euler_jacobi_weight(link, a[i].raw()));
    WitnessInstance out;
    out.decomposition = Decomposition(a, w);
    out.prime = f.modulus();
    out.linking = link;
    out.seed = seed;
    out.attempts = attempt;
    out.aw_hilbert = aw_hilbert;
    out.w_hilbert = w_hilbert;
    out.hyperplane = lambda_form;
    if (!finish_witness(out, f, ci, minimal_generators(f, aw_pieces), {1, 4, 8}, {1, 4, 8, 8, 4, 1})) continue;
    return out;
  }
  throw GenerationError("non-identifiable r = 13 construction failed within the retry budget");
}

NondisjointInstance make_nondisjoint_13(std::uint64_t seed, int budget) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    auto base = make_nonidentifiable_12(rng(), budget);
    std::vector<ProjectivePoint> pts = base.decomposition.points.points();
    pts.emplace_back(random_vector(rng, kVars, kCoordinateBox));
    PointSet a;
    try {
      a = PointSet(pts);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!generic_enough(a)) continue;
    std::uniform_int_distribution<long> d(1, 9);
    auto w = base.decomposition.weights;
    w.emplace_back((rng() & 1 ? 1 : -1) * d(rng));
    NondisjointInstance out;
    out.decomposition = Decomposition(a, w);
    out.base = std::move(base);
    out.planted = 12;
    return out;
  }
  throw GenerationError("non-disjoint r = 13 construction failed within the retry budget");
}

}  // namespace waring
