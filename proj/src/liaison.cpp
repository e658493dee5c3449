#include "waring/liaison.hpp"

#include "waring/criteria.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace waring {

namespace {

// Element of a free module in one degree: one form per generator, degree-0 zero where the shift exceeds it.
using Elt = std::vector<FormP>;

Elt zero_elt(const PrimeField& f, const FreeModule& m, int d) {
  Elt e;
  for (int s : m.shifts) e.push_back(zero_form(f, std::max(d - s, 0)));
  return e;
}

void add_times(const PrimeField& f, Elt& acc, const FormP& g, const Elt& e, const FreeModule& m, int e_degree,
               bool negate) {
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (e_degree < m.shifts[i]) continue;
    auto p = multiply(f, g, e[i]);
    if (negate) p = scale(f, f.neg(1), p);
    acc[i] = add(f, acc[i], p);
  }
}

VecP flatten(const FreeModule& m, int d, const Elt& e) {
  VecP v;
  v.reserve(m.dim(d));
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (d < m.shifts[i]) continue;
    v.insert(v.end(), e[i].coeffs.begin(), e[i].coeffs.end());
  }
  return v;
}

std::vector<int> ci_type(const std::vector<FormP>& gens) {
  std::vector<int> t;
  for (const auto& g : gens) t.push_back(g.degree);
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<FormQ> primitive_forms(int d, const std::vector<VecQ>& vecs) {
  std::vector<FormQ> out;
  for (const auto& v : vecs) {
    auto ints = primitive_integer_row(v);
    FormQ g{d, {}};
    for (auto& z : ints) g.coeffs.emplace_back(z);
    out.push_back(std::move(g));
  }
  return out;
}

// x with d x = rhs in the given degree, one per right-hand side; random kernel shifts when rng is set.
std::vector<Elt> lift_batch(const PrimeField& f, const ModuleMap<std::uint32_t>& d, int deg, const std::vector<Elt>& rhs,
                            std::mt19937_64* rng) {
  auto a = graded_piece(f, d, deg);
  MatP b(a.rows(), rhs.size(), 0);
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    auto v = flatten(d.target, deg, rhs[j]);
    for (std::size_t i = 0; i < v.size(); ++i) b(i, j) = v[i];
  }
  auto sol = solve_many(f, a, b);
  if (!sol.all_consistent()) throw LiftingError("comparison map does not lift in degree " + std::to_string(deg));
  SubP ker;
  if (rng) ker = kernel(f, a);
  std::vector<Elt> out;
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    VecP x(a.cols());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = sol.x(i, j);
    if (rng) {
      std::uniform_int_distribution<std::uint32_t> coef(0, f.modulus() - 1);
      for (const auto& n : ker.basis) {
        auto c = coef(*rng);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], f.mul(c, n[i]));
      }
    }
    out.push_back(split_components(f, d.source, deg, x));
  }
  return out;
}

ModuleMap<std::uint32_t> syzygy_map(const PrimeField& f, const ModuleMap<std::uint32_t>& prev, int deg,
                                    std::size_t expected) {
  auto ker = kernel(f, graded_piece(f, prev, deg - 1));
  if (ker.dim() != 0) throw LiftingError("unexpected syzygy in degree " + std::to_string(deg - 1));
  ker = kernel(f, graded_piece(f, prev, deg));
  if (ker.dim() != expected)
    throw LiftingError("expected " + std::to_string(expected) + " syzygies in degree " + std::to_string(deg) +
                       ", found " + std::to_string(ker.dim()));
  ModuleMap<std::uint32_t> m;
  m.target = prev.source;
  m.source.shifts.assign(expected, deg);
  m.entries.assign(m.target.rank(), {});
  for (const auto& v : ker.basis) {
    auto comps = split_components(f, m.target, deg, v);
    for (std::size_t i = 0; i < comps.size(); ++i) m.entries[i].push_back(comps[i]);
  }
  return m;
}

}  // namespace

CompleteIntersection certify_ci(const PrimeField& f, const std::vector<FormP>& gens) {
  auto type = ci_type(gens);
  static const std::vector<std::vector<int>> allowed = {{2, 2, 2, 3}, {2, 2, 3, 3}, {1, 1, 1, 2}};
  if (std::find(allowed.begin(), allowed.end(), type) == allowed.end())
    throw std::invalid_argument("unsupported complete intersection type");
  CompleteIntersection ci;
  ci.generators = gens;
  ci.type = type;
  ci.h_vector = koszul_hvector(type);
  ci.socle = static_cast<int>(ci.h_vector.size()) - 1;
  TruncatedGroebner gb(f, gens, ci.socle + 1);
  long expected = 0;
  for (int d = 0; d <= ci.socle + 1; ++d) {
    if (d <= ci.socle) expected += ci.h_vector[d];
    std::size_t h = gb.hilbert(d);
    ci.hilbert.push_back(h);
    if (static_cast<long>(h) != expected)
      throw NotProper(d, "not a proper intersection: h(" + std::to_string(d) + ") = " + std::to_string(h) +
                             ", Koszul count " + std::to_string(expected));
  }
  return ci;
}

std::vector<FormP> minimal_generators(const PrimeField& f, const std::vector<IdealPieceP>& pieces) {
  std::vector<FormP> gens;
  for (const auto& piece : pieces) {
    int e = piece.degree;
    SubP have{dim_graded(e), {}, {}};
    if (!gens.empty()) have = generated_piece(f, gens, e).space;
    for (const auto& g : piece.forms())
      if (!contains(f, have, g.coeffs)) {
        gens.push_back(g);
        have = subspace_sum(f, have, span(f, dim_graded(e), {g.coeffs}));
      }
  }
  return gens;
}

std::vector<IdealPieceP> residue_points_ideal(const PrimeField& f, const CompleteIntersection& ci,
                                              const std::vector<FormP>& a_gens, int d_max) {
  int top = 0;
  for (const auto& g : a_gens) top = std::max(top, g.degree);
  TruncatedGroebner gb(f, ci.generators, d_max + top);
  std::vector<IdealPieceP> out;
  for (int d = 0; d <= d_max; ++d) out.push_back(colon_piece(f, gb, a_gens, d));
  return out;
}

std::vector<IdealPieceP> residue_points_ideal(const PrimeField& f, const CompleteIntersection& ci, const PointSet& a,
                                              int d_max) {
  for (const auto& g : ci.generators)
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!f.is_zero(evaluate(f, g, coords(f, a[i]))))
        throw std::invalid_argument("complete intersection does not contain the point set");
  std::vector<IdealPieceP> pieces;
  for (int e = 0; e <= 4; ++e) pieces.push_back(ideal_piece(f, a, e));
  auto a_gens = minimal_generators(f, pieces);
  return residue_points_ideal(f, ci, a_gens, d_max);
}

std::vector<FormP> ResidueFamily::generators() const {
  auto out = quadrics;
  out.insert(out.end(), cubics.begin(), cubics.end());
  return out;
}

void residue_base_q(const PointSet& a, std::vector<FormQ>& quadrics, std::vector<FormQ>& cubics) {
  RationalField q;
  if (a.size() != 12) throw std::invalid_argument("residue family needs 12 points");
  auto i2 = ideal_piece(q, a, 2);
  if (i2.dim() != 3) throw LiftingError("expected 3 quadrics through the points, found " + std::to_string(i2.dim()));
  quadrics = primitive_forms(2, i2.space.basis);
  auto i3 = ideal_piece(q, a, 3);
  auto c3 = generated_piece(q, quadrics, 3);
  if (i3.dim() != 23 || c3.dim() != 15) throw LiftingError("unexpected cubic dimensions through the points");
  std::vector<VecQ> rest;
  for (const auto& v : i3.space.basis) rest.push_back(reduce(q, c3.space, v));
  auto comp = span(q, dim_graded(3), rest);
  if (comp.dim() != 8) throw LiftingError("cubic complement has dimension " + std::to_string(comp.dim()));
  cubics = primitive_forms(3, comp.basis);
}

ResidueFamily make_residue_family(const PointSet& a, const PrimeField& f, std::uint64_t splitting_seed) {
  ResidueFamily fam;
  fam.prime = f.modulus();
  fam.splitting_seed = splitting_seed;
  residue_base_q(a, fam.quadrics_q, fam.cubics_q);
  for (const auto& g : fam.quadrics_q) fam.quadrics.push_back(to_field(f, g));
  for (const auto& g : fam.cubics_q) fam.cubics.push_back(to_field(f, g));

  ModuleMap<std::uint32_t> d1;
  d1.target.shifts = {0};
  d1.source.shifts = {2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3};
  d1.entries = {fam.generators()};
  if (kernel(f, graded_piece(f, d1, 3)).dim() != 0) throw LiftingError("generators dependent modulo p");
  auto d2 = syzygy_map(f, d1, 4, 27);
  auto d3 = syzygy_map(f, d2, 5, 24);
  auto d4 = syzygy_map(f, d3, 6, 7);
  fam.resolution = {d1, d2, d3, d4};

  std::mt19937_64 rng(splitting_seed);
  std::mt19937_64* rp = splitting_seed ? &rng : nullptr;

  // Koszul generators f_0..f_3 = Q_1, Q_2, Q_3, F; subsets as bit masks, bit 3 marks F.
  const int deg[4] = {2, 2, 2, 3};
  auto mask_degree = [&](int mask) {
    int s = 0;
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) s += deg[i];
    return s;
  };
  const std::size_t nk = fam.cubics.size();
  std::map<int, Elt> shared;
  std::vector<std::map<int, Elt>> per_k(nk);
  auto alpha = [&](int mask, std::size_t k) -> const Elt& {
    return (mask & 8) ? per_k[k].at(mask) : shared.at(mask);
  };
  auto gen = [&](int i, std::size_t k) -> const FormP& { return i < 3 ? fam.quadrics[i] : fam.cubics[k]; };
  for (std::size_t k = 0; k < nk; ++k)
    for (int i = 0; i < 4; ++i) {
      int mask = 1 << i;
      Elt e = zero_elt(f, d1.source, deg[i]);
      e[i < 3 ? i : 3 + k] = {0, {1}};
      if (i < 3)
        shared[mask] = e;
      else
        per_k[k][mask] = e;
    }
  const ModuleMap<std::uint32_t>* maps[5] = {nullptr, &d1, &d2, &d3, &d4};
  auto rhs = [&](int mask, std::size_t k, int level) {
    const FreeModule& mod = maps[level - 1]->source;
    int dd = mask_degree(mask);
    Elt acc = zero_elt(f, mod, dd);
    int t = 0;
    for (int i = 0; i < 4; ++i) {
      if (!(mask >> i & 1)) continue;
      int sub = mask & ~(1 << i);
      add_times(f, acc, gen(i, k), alpha(sub, k), mod, mask_degree(sub), t % 2 == 1);
      ++t;
    }
    return acc;
  };
  for (int level = 2; level <= 4; ++level) {
    std::vector<int> shared_masks, f_masks;
    for (int mask = 1; mask < 16; ++mask) {
      if (__builtin_popcount(mask) != level) continue;
      (mask & 8 ? f_masks : shared_masks).push_back(mask);
    }
    if (!shared_masks.empty()) {
      std::vector<Elt> r;
      for (int m : shared_masks) r.push_back(rhs(m, 0, level));
      auto x = lift_batch(f, *maps[level], mask_degree(shared_masks[0]), r, rp);
      for (std::size_t i = 0; i < shared_masks.size(); ++i) shared[shared_masks[i]] = x[i];
    }
    std::vector<Elt> r;
    for (std::size_t k = 0; k < nk; ++k)
      for (int m : f_masks) r.push_back(rhs(m, k, level));
    auto x = lift_batch(f, *maps[level], mask_degree(f_masks[0]), r, rp);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < nk; ++k)
      for (int m : f_masks) per_k[k][m] = x[idx++];
  }
  for (std::size_t k = 0; k < nk; ++k) fam.lifted.push_back(per_k[k].at(15));
  return fam;
}

FormP family_cubic(const ResidueFamily& fam, const VecP& lambda) {
  auto f = fam.field();
  if (lambda.size() != fam.cubics.size()) throw std::invalid_argument("parameter vector has the wrong length");
  auto out = zero_form(f, 3);
  for (std::size_t k = 0; k < lambda.size(); ++k) out = add(f, out, scale(f, lambda[k], fam.cubics[k]));
  return out;
}

std::vector<FormP> lift_cubic(const ResidueFamily& fam, const VecP& lambda) {
  auto f = fam.field();
  if (std::all_of(lambda.begin(), lambda.end(), [](std::uint32_t x) { return x == 0; }))
    throw std::invalid_argument("parameter vector must be nonzero");
  std::vector<FormP> out = {family_cubic(fam, lambda)};
  std::size_t nm = fam.lifted.empty() ? 0 : fam.lifted[0].size();
  for (std::size_t m = 0; m < nm; ++m) {
    auto g = zero_form(f, 3);
    for (std::size_t k = 0; k < lambda.size(); ++k) g = add(f, g, scale(f, lambda[k], fam.lifted[k][m]));
    out.push_back(std::move(g));
  }
  return out;
}

FinalTestSystem build_mateqns(const FormQ& t, const PointSet& a, const ResidueFamily& fam) {
  auto f = fam.field();
  if (t.degree != 4) throw std::invalid_argument("final test needs a quartic");
  auto tp = to_field(f, t);
  auto w = apolar_functional(f, tp);
  auto pair = [&](const FormP& g) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s = f.add(s, f.mul(w[i], g.coeffs[i]));
    return s;
  };
  for (const auto& g : generated_piece(f, fam.generators(), 4).forms())
    if (pair(g) != 0) throw std::invalid_argument("T is not orthogonal to the quartics through the points");
  for (const auto& g : fam.generators())
    for (std::size_t i = 0; i < a.size(); ++i)
      if (evaluate(f, g, coords(f, a[i])) != 0) throw std::invalid_argument("family does not belong to the point set");

  const std::size_t nk = fam.cubics.size();
  FinalTestSystem out;
  SubP rows{nk, {}, {}};
  auto push = [&](const std::string& name, const std::vector<FormP>& per_k) {
    for (int j = 0; j < kVars; ++j) {
      VecP row(nk);
      for (std::size_t k = 0; k < nk; ++k) row[k] = pair(multiply(f, per_k[k], variable(f, j)));
      ++out.raw_rows;
      if (std::all_of(row.begin(), row.end(), [](std::uint32_t x) { return x == 0; })) {
        ++out.zero_rows;
        continue;
      }
      if (contains(f, rows, row)) continue;
      rows = subspace_sum(f, rows, span(f, nk, {row}));
      out.matrix.append_row(row);
      out.provenance.push_back(name + "*x" + std::to_string(j));
    }
  };
  push("F", fam.cubics);
  push("F", fam.cubics);
  for (std::size_t m = 0; m < fam.lifted[0].size(); ++m) {
    std::vector<FormP> g;
    for (std::size_t k = 0; k < nk; ++k) g.push_back(fam.lifted[k][m]);
    push("G" + std::to_string(m + 1), g);
  }
  if (out.matrix.rows() == 0) out.matrix = MatP(0, nk);
  out.rank = out.matrix.rows();
  out.kernel = kernel(f, out.matrix);
  out.hash = matrix_hash(out.matrix);

  std::mt19937_64 rng(fam.prime ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::uint32_t> coef(1, f.modulus() - 1);
  VecP lambda0(nk);
  for (auto& x : lambda0) x = coef(rng);
  auto gens = lift_cubic(fam, lambda0);
  auto z = fam.quadrics;
  z.push_back(gens[0]);
  TruncatedGroebner gb(f, z, 4);
  std::vector<VecP> nfs;
  for (const auto& g : gens)
    for (int j = 0; j < kVars; ++j) nfs.push_back(gb.normal_form(multiply(f, g, variable(f, j))));
  out.selected_rows = span(f, dim_graded(4), nfs).dim();
  return out;
}

Rational euler_jacobi_weight(const std::vector<FormQ>& gens, const std::vector<Rational>& u) {
  RationalField q;
  auto kappa = jacobian_scale(q, gens, u);
  auto w = inverse(kappa);
  if (!w) throw std::invalid_argument("singular point of the complete intersection");
  return *w;
}

MatQ euler_jacobi_system(const PointSet& a, const std::vector<Rational>& weights, const std::vector<FormQ>& quadrics,
                         const std::vector<FormQ>& cubics) {
  RationalField q;
  if (weights.size() != a.size() || quadrics.size() != 3) throw std::invalid_argument("bad Euler-Jacobi input");
  std::vector<VecQ> scaled(a.size(), VecQ(cubics.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < cubics.size(); ++k) {
      auto gens = quadrics;
      gens.push_back(cubics[k]);
      scaled[i][k] = weights[i] * jacobian_scale(q, gens, a[i].raw());
    }
  MatQ m(a.size() - 1, cubics.size());
  for (std::size_t i = 1; i < a.size(); ++i)
    for (std::size_t k = 0; k < cubics.size(); ++k) m(i - 1, k) = scaled[i][k] - scaled[0][k];
  return m;
}

ReducednessReport reducedness_certificate(const PrimeField& f, const std::vector<FormP>& gens, int max_degree) {
  if (gens.size() != 4) throw std::invalid_argument("reducedness certificate expects four forms");
  auto all = gens;
  for (auto& m : jacobian_maximal_minors(f, gens)) all.push_back(std::move(m));
  TruncatedGroebner gb(f, all, max_degree);
  ReducednessReport out;
  out.method = "groebner mod " + std::to_string(f.modulus()) + " of the generators and 5 Jacobian minors";
  for (int d = 0; d <= max_degree; ++d) {
    out.degree = d;
    out.h = gb.hilbert(d);
    if (out.h == 0) {
      out.reduced = true;
      break;
    }
  }
  return out;
}

}  // namespace waring
