#pragma once

#include "waring/groebner.hpp"
#include "waring/poly.hpp"

#include <string>
#include <vector>

namespace waring {

class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<ProjectivePoint> pts);  // rejects repeated points
  std::size_t size() const { return pts_.size(); }
  const ProjectivePoint& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<ProjectivePoint>& points() const { return pts_; }
  PointSet without(std::size_t i) const;
  PointSet subset(const std::vector<std::size_t>& idx) const;
  PointSet united(const PointSet& o) const;

 private:
  std::vector<ProjectivePoint> pts_;
};

// Row i is veronese(P_i, d).
template <class F>
Matrix<Elem<F>> evaluation_matrix(const F& f, const PointSet& a, int d) {
  Matrix<Elem<F>> m(a.size(), dim_graded(d));
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = veronese(f, coords(f, a[i]), d);
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
  }
  return m;
}

// Row i is (u_i^alpha); its kernel is the space of degree-d forms through the points.
template <class F>
Matrix<Elem<F>> monomial_evaluation_matrix(const F& f, const PointSet& a, int d) {
  Matrix<Elem<F>> m(a.size(), dim_graded(d));
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = monomial_values(f, coords(f, a[i]), d);
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
  }
  return m;
}

struct HilbertData {
  std::vector<std::size_t> values;      // h(0..d_max)
  std::vector<long> first_difference;   // Dh(0..d_max)
  std::vector<long> h_vector;           // nonzero prefix of Dh
  std::vector<std::string> methods;     // how each h(d) was certified
};

HilbertData hilbert_from_values(std::vector<std::size_t> values);
HilbertData hilbert_data(const PointSet& a, int d_max, const FieldPolicy& policy = {});

template <class E>
struct IdealPiece {
  int degree = 0;
  Subspace<E> space;
  std::size_t dim() const { return space.dim(); }
  std::vector<Form<E>> forms() const {
    std::vector<Form<E>> out;
    for (const auto& b : space.basis) out.push_back({degree, b});
    return out;
  }
};

using IdealPieceQ = IdealPiece<Rational>;
using IdealPieceP = IdealPiece<std::uint32_t>;

template <class F>
IdealPiece<Elem<F>> ideal_piece(const F& f, const PointSet& a, int d) {
  if (a.size() == 0) {
    std::vector<std::vector<Elem<F>>> all;
    for (std::size_t i = 0; i < dim_graded(d); ++i) {
      std::vector<Elem<F>> e(dim_graded(d), f.zero());
      e[i] = f.one();
      all.push_back(std::move(e));
    }
    return {d, span(f, dim_graded(d), all)};
  }
  return {d, kernel(f, monomial_evaluation_matrix(f, a, d))};
}

// Span of m*g over monomials m of complementary degree.
template <class F>
IdealPiece<Elem<F>> generated_piece(const F& f, const std::vector<Form<Elem<F>>>& gens, int d) {
  std::vector<std::vector<Elem<F>>> vecs;
  for (const auto& g : gens) {
    if (g.degree > d) throw std::invalid_argument("generator degree exceeds target degree");
    auto m = multiplication_matrix(f, g, d - g.degree);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Elem<F>> col(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m(i, j);
      vecs.push_back(std::move(col));
    }
  }
  return {d, span(f, dim_graded(d), vecs)};
}

// dim (I_A)_d - dim R_1 (I_A)_{d-1}
template <class F>
std::size_t min_generator_count(const F& f, const PointSet& a, int d) {
  auto here = ideal_piece(f, a, d);
  if (d == 0) return here.dim();
  auto below = ideal_piece(f, a, d - 1);
  return here.dim() - generated_piece(f, below.forms(), d).dim();
}

// Brute force: removing any point leaves (I_Z)_i unchanged.
template <class F>
bool cayley_bacharach(const F& f, const PointSet& z, int i) {
  if (z.size() < 2) throw std::invalid_argument("Cayley-Bacharach needs at least two points");
  std::size_t full = rank(f, monomial_evaluation_matrix(f, z, i));
  for (std::size_t k = 0; k < z.size(); ++k)
    if (rank(f, monomial_evaluation_matrix(f, z.without(k), i)) != full) return false;
  return true;
}

// Dh(0)+...+Dh(j) <= Dh(i+1-j)+...+Dh(i+1)
bool cb_inequality(const HilbertData& h, int i, int j);

struct BaseLocusReport {
  enum class Kind { Finite, Curve, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t length = 0;       // finite case
  long curve_degree = 0;        // curve case: h(t) = curve_degree * t + constant
  long constant = 0;
  int window_start = 6;
  std::vector<std::size_t> window;  // h on the probe degrees
  std::string method;
  std::string describe() const;
};

// Hilbert function of R/(quadrics) on the probe window, from a truncated Groebner basis mod p.
BaseLocusReport base_locus(const PrimeField& f, const std::vector<FormP>& quadrics, int lo = 6, int hi = 10);

// { g in R_d : g * a_gen in (z_gens) for every a_gen }, by normal forms modulo a Groebner basis of (z_gens).
IdealPieceP colon_piece(const PrimeField& f, const TruncatedGroebner& z, const std::vector<FormP>& a_gens, int d);
IdealPieceP colon_piece(const PrimeField& f, const std::vector<FormP>& z_gens, const std::vector<FormP>& a_gens, int d);
// Generators of I_A taken as the full degree 2..3 pieces (points in P^4 with h stable by degree 3).
IdealPieceP colon_piece(const PrimeField& f, const std::vector<FormP>& z_gens, const PointSet& a, int d);

// Coefficients of prod (1 + t + ... + t^(d_i - 1)).
std::vector<long> koszul_hvector(const std::vector<int>& degrees);

// Dh_B(i) = Dh_Z(i) - Dh_A(socle - i); throws on a negative entry.
std::vector<long> linkage_hvector(const std::vector<long>& z_hvec, const std::vector<long>& a_dh, int socle);

std::vector<long> difference(const std::vector<std::size_t>& h);

}  // namespace waring
