#include "waring/extract.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace waring {

namespace {

using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

// Coefficients divided by the largest one in absolute value, then rounded.
std::vector<double> scaled_coefficients(const std::vector<Rational>& c) {
  Rational big = 0;
  for (const auto& x : c) big = std::max(big, Rational(abs(x)));
  std::vector<double> out(c.size(), 0.0);
  if (big == 0) return out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational t = c[i] / big;
    out[i] = t.get_d();
  }
  return out;
}

std::vector<Complex> monomial_values_c(const CPoint& z, int d) {
  const auto& mons = monomials(d);
  std::vector<Complex> out;
  out.reserve(mons.size());
  for (const auto& e : mons) {
    Complex v = 1.0;
    for (int j = 0; j < kVars; ++j)
      for (int k = 0; k < e[j]; ++k) v *= z[j];
    out.push_back(v);
  }
  return out;
}

Complex evaluate_c(const std::vector<double>& g, int d, const CPoint& z) {
  auto m = monomial_values_c(z, d);
  Complex s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * m[i];
  return s;
}

// d/dx_j of a form given by doubles: value at z via the exponent shift.
Complex partial_c(const std::vector<double>& g, int d, int j, const CPoint& z) {
  const auto& mons = monomials(d);
  Complex s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& e = mons[i];
    if (e[j] == 0 || g[i] == 0.0) continue;
    Complex v = static_cast<double>(e[j]);
    for (int a = 0; a < kVars; ++a)
      for (int k = 0; k < e[a] - (a == j ? 1 : 0); ++k) v *= z[a];
    s += g[i] * v;
  }
  return s;
}

double norm(const CPoint& z) {
  double s = 0;
  for (const auto& c : z) s += std::norm(c);
  return std::sqrt(s);
}

CPoint normalize_max(CPoint z) {
  std::size_t k = 0;
  for (std::size_t j = 1; j < z.size(); ++j)
    if (std::abs(z[j]) > std::abs(z[k])) k = j;
  Complex s = z[k];
  for (auto& c : z) c /= s;
  z[k] = 1.0;
  return z;
}

struct DoubleForm {
  int degree;
  std::vector<double> c;
  double norm2;
};

DoubleForm to_double_form(const FormQ& g) {
  DoubleForm out{g.degree, scaled_coefficients(g.coeffs), 0};
  for (double x : out.c) out.norm2 += x * x;
  out.norm2 = std::sqrt(out.norm2);
  return out;
}

double residual_of(const DoubleForm& g, const CPoint& z) {
  return std::abs(evaluate_c(g.c, g.degree, z)) / (g.norm2 * std::pow(norm(z), g.degree));
}

// Gauss-Newton on the generators plus the chart h.z = h.z0.
CPoint refine(const std::vector<DoubleForm>& gens, CPoint z, int steps) {
  CPoint h;
  double nz = norm(z);
  for (int j = 0; j < kVars; ++j) h[j] = std::conj(z[j]) / (nz * nz);
  for (int it = 0; it < steps; ++it) {
    MatC jac(gens.size() + 1, kVars);
    VecC rhs(gens.size() + 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      double scale = gens[i].norm2 * std::pow(norm(z), gens[i].degree);
      rhs(i) = -evaluate_c(gens[i].c, gens[i].degree, z) / scale;
      for (int j = 0; j < kVars; ++j) jac(i, j) = partial_c(gens[i].c, gens[i].degree, j, z) / scale;
    }
    Complex chart = 0.0;
    for (int j = 0; j < kVars; ++j) {
      jac(gens.size(), j) = h[j];
      chart += h[j] * z[j];
    }
    rhs(gens.size()) = 1.0 - chart;
    VecC step = jac.colPivHouseholderQr().solve(rhs);
    for (int j = 0; j < kVars; ++j) z[j] += step(j);
  }
  return z;
}

double min_relative_gap(const VecC& ev) {
  double scale = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) scale = std::max(scale, std::abs(ev(i)));
  if (scale == 0) return 0;
  double gap = 1e300;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    for (Eigen::Index k = i + 1; k < ev.size(); ++k) gap = std::min(gap, std::abs(ev(i) - ev(k)) / scale);
  return gap;
}

bool same_point(const CPoint& a, const CPoint& b, double tol) {
  Complex inner = 0.0;
  for (int j = 0; j < kVars; ++j) inner += std::conj(a[j]) * b[j];
  return 1.0 - std::abs(inner) / (norm(a) * norm(b)) < tol;
}

}  // namespace

double relative_residual(const FormQ& g, const CPoint& z) { return residual_of(to_double_form(g), z); }

PointExtraction extract_points(const std::vector<FormQ>& generators, std::size_t r, int d, const ExtractOptions& opts) {
  const int e = d + 1;
  const std::size_t ne = dim_graded(e), nd = dim_graded(d);
  if (r == 0 || r > nd) throw std::invalid_argument("length out of range for the probe degree");
  std::vector<DoubleForm> gens;
  for (const auto& g : generators) {
    if (g.degree > e) throw std::invalid_argument("generator degree above the probe degree");
    gens.push_back(to_double_form(g));
  }

  // spanning set of I_e: every generator times every monomial of the complementary degree
  std::vector<std::vector<double>> rows;
  for (const auto& g : gens) {
    int k = e - g.degree;
    const auto& tab = product_table(g.degree, k);
    std::size_t nk = dim_graded(k);
    for (std::size_t m = 0; m < nk; ++m) {
      std::vector<double> row(ne, 0.0);
      for (std::size_t i = 0; i < g.c.size(); ++i) row[tab[i * nk + m]] += g.c[i];
      rows.push_back(std::move(row));
    }
  }
  Eigen::MatrixXd big(std::max(rows.size(), ne), ne);
  big.setZero();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double n = 0;
    for (double x : rows[i]) n += x * x;
    n = std::sqrt(n);
    for (std::size_t j = 0; j < ne; ++j) big(i, j) = rows[i][j] / n;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(big, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::size_t rank = ne - r;
  PointExtraction out;
  out.null_gap = sv(rank - 1) / std::max(sv(rank), 1e-300);
  // columns of the null basis are combinations of the evaluation vectors v_e(z)
  Eigen::MatrixXd null = svd.matrixV().rightCols(r);

  // rows of x_j * m, m of degree d
  const auto& tab = product_table(1, d);
  std::vector<MatC> shifted(kVars, MatC(nd, r));
  for (int j = 0; j < kVars; ++j)
    for (std::size_t m = 0; m < nd; ++m) shifted[j].row(m) = null.row(tab[j * nd + m]).cast<Complex>();

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int draw = 1; draw <= opts.retries; ++draw) {
    MatC base = MatC::Zero(nd, r), probe = MatC::Zero(nd, r);
    for (int j = 0; j < kVars; ++j) {
      base += gauss(rng) * shifted[j];
      probe += gauss(rng) * shifted[j];
    }
    Eigen::HouseholderQR<MatC> qr(base);
    MatC q = qr.householderQ() * MatC::Identity(nd, r);
    MatC base_sq = q.adjoint() * base;
    Eigen::PartialPivLU<MatC> lu(base_sq);
    std::vector<MatC> mult;
    for (int j = 0; j < kVars; ++j) mult.push_back(lu.solve(q.adjoint() * shifted[j]));
    MatC combo = lu.solve(q.adjoint() * probe);
    Eigen::ComplexEigenSolver<MatC> es(combo);
    if (es.info() != Eigen::Success || min_relative_gap(es.eigenvalues()) < opts.cluster_gap) continue;
    out.points.clear();
    out.max_residual = 0;
    for (std::size_t k = 0; k < r; ++k) {
      VecC v = es.eigenvectors().col(k);
      CPoint z;
      for (int j = 0; j < kVars; ++j) z[j] = v.dot(mult[j] * v) / v.squaredNorm();
      z = normalize_max(refine(gens, normalize_max(z), 3));
      for (const auto& g : gens) out.max_residual = std::max(out.max_residual, residual_of(g, z));
      out.points.push_back(z);
    }
    out.draws = draw;
    if (out.max_residual > opts.residual) throw NumericFailure("generator residual " + std::to_string(out.max_residual));
    return out;
  }
  throw NumericFailure("clustered spectrum in every draw");
}

NumericDecomposition extract_second_decomposition(const Decomposition& dec, const Witness& w, const ExtractOptions& opts) {
  if (w.linking.size() != 4) throw std::invalid_argument("witness has no linking complete intersection");
  PointSet a = w.shared_point == Witness::kNone ? dec.points : dec.points.without(w.shared_point);
  int socle = -kVars;
  for (const auto& g : w.linking) socle += g.degree;
  std::size_t length = 1;
  for (const auto& g : w.linking) length *= static_cast<std::size_t>(g.degree);
  auto z = extract_points(w.linking, length, socle + 1, opts);

  std::vector<CPoint> a_c;
  for (const auto& p : a.points()) {
    CPoint c;
    auto s = scaled_coefficients(p.raw());
    for (int j = 0; j < kVars; ++j) c[j] = s[j];
    a_c.push_back(normalize_max(c));
  }
  NumericDecomposition out;
  std::vector<bool> used(a_c.size(), false);
  for (const auto& p : z.points) {
    bool in_a = false;
    for (std::size_t i = 0; i < a_c.size() && !in_a; ++i)
      if (!used[i] && same_point(p, a_c[i], opts.pairing)) used[i] = in_a = true;
    if (!in_a) out.points.push_back(p);
  }
  if (std::count(used.begin(), used.end(), true) != static_cast<long>(a_c.size()))
    throw NumericFailure("points of A not all found in the linking scheme");
  if (w.shared_point != Witness::kNone) {
    CPoint c;
    auto s = scaled_coefficients(dec.points[w.shared_point].raw());
    for (int j = 0; j < kVars; ++j) c[j] = s[j];
    out.points.push_back(normalize_max(c));
  }
  out.generator_residual = z.max_residual;

  // weights by least squares against T
  auto t = scaled_coefficients(dec.form().coeffs);
  const auto& mons = monomials(4);
  MatC v(mons.size(), out.points.size());
  for (std::size_t b = 0; b < out.points.size(); ++b) {
    auto vals = monomial_values_c(out.points[b], 4);
    for (std::size_t i = 0; i < mons.size(); ++i) v(i, b) = multinomial(mons[i]).get_d() * vals[i];
  }
  VecC rhs(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) rhs(i) = t[i];
  VecC sol = v.colPivHouseholderQr().solve(rhs);
  out.weight_residual = (v * sol - rhs).norm() / rhs.norm();
  for (Eigen::Index i = 0; i < sol.size(); ++i) out.weights.push_back(sol(i));

  // conjugate structure
  std::vector<bool> paired(out.points.size(), false);
  out.conjugation_closed = true;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (paired[i]) continue;
    CPoint c;
    for (int j = 0; j < kVars; ++j) c[j] = std::conj(out.points[i][j]);
    if (same_point(c, out.points[i], opts.pairing)) {
      paired[i] = true;
      ++out.real_points;
      continue;
    }
    bool found = false;
    for (std::size_t k = i + 1; k < out.points.size() && !found; ++k)
      if (!paired[k] && same_point(c, out.points[k], opts.pairing)) paired[i] = paired[k] = found = true;
    if (found) ++out.conjugate_pairs;
    else out.conjugation_closed = false;
  }
  return out;
}

}  // namespace waring
