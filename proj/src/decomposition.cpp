#include "waring/decomposition.hpp"

namespace waring {

Decomposition::Decomposition(PointSet pts, std::vector<Rational> w, int deg) : points(std::move(pts)), weights(std::move(w)), degree(deg) {
  if (points.size() != weights.size()) throw std::invalid_argument("number of weights differs from number of points");
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (sgn(weights[i]) == 0) throw std::invalid_argument("weight " + std::to_string(i + 1) + " is zero");
}

FormQ Decomposition::form() const { return power_sum(points, weights, degree); }

FormQ power_sum(const PointSet& a, const std::vector<Rational>& weights, int degree) {
  RationalField q;
  FormQ t = zero_form(q, degree);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto v = veronese(q, a[i].raw(), degree);
    for (std::size_t j = 0; j < v.size(); ++j) t.coeffs[j] += weights[i] * v[j];
  }
  return t;
}

WeightRecovery recover_weights(const FormQ& t, const PointSet& a) {
  RationalField q;
  auto ev = evaluation_matrix(q, a, t.degree);
  const std::size_t r = a.size();
  // r monomials independent mod p give a square subsystem; the other rows are checked afterwards
  std::vector<std::size_t> rows;
  PrimeField f(kDefaultPrime);
  if (auto evp = reduce_mod(f, ev)) {
    auto e = rref(f, *evp);
    if (e.rank() == r) rows = e.pivots;
  }
  if (rows.empty()) {
    if (rank(q, ev) != r) throw std::invalid_argument("Veronese images of the points are linearly dependent");
    auto e = rref(q, ev);
    rows = e.pivots;
  }
  MatQ square(r, r);
  VecQ rhs(r);
  for (std::size_t m = 0; m < r; ++m) {
    for (std::size_t i = 0; i < r; ++i) square(m, i) = ev(i, rows[m]);
    rhs[m] = t.coeffs[rows[m]];
  }
  auto sol = solve(q, square, rhs);
  WeightRecovery out;
  if (!sol) throw std::logic_error("nonsingular subsystem without solution");
  for (std::size_t j = 0; j < t.coeffs.size(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < r; ++i) s += (*sol)[i] * ev(i, j);
    if (s != t.coeffs[j]) {
      out.certificate = "coefficient " + std::to_string(j) + " is not matched by the unique solution on the independent monomials";
      return out;
    }
  }
  out.in_span = true;
  out.weights = *sol;
  return out;
}

}  // namespace waring
