#pragma once

#include "waring/decomposition.hpp"
#include "waring/groebner.hpp"
#include "waring/pointsets.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

struct NotProper : std::runtime_error {
  int degree;
  NotProper(int d, const std::string& what) : std::runtime_error(what), degree(d) {}
};

// Raised when a linear system of the lifting is inconsistent or a dimension is off.
struct LiftingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompleteIntersection {
  std::vector<FormP> generators;
  std::vector<int> type;
  std::vector<long> h_vector;          // Koszul prediction
  std::vector<std::size_t> hilbert;    // h_Z(0..socle+1), checked against the prediction
  int socle = 0;
};

// Types (2,2,2,3), (2,2,3,3), (1,1,1,2). Throws NotProper at the first degree where the
// generated piece falls short of the Koszul count.
CompleteIntersection certify_ci(const PrimeField& f, const std::vector<FormP>& gens);

// Forms of the given pieces (ascending degrees) not generated by earlier ones.
std::vector<FormP> minimal_generators(const PrimeField& f, const std::vector<IdealPieceP>& pieces);

// (I_Z : I_A)_d for d = 0..d_max, with I_A generated by a_gens.
std::vector<IdealPieceP> residue_points_ideal(const PrimeField& f, const CompleteIntersection& ci,
                                              const std::vector<FormP>& a_gens, int d_max);
std::vector<IdealPieceP> residue_points_ideal(const PrimeField& f, const CompleteIntersection& ci, const PointSet& a,
                                              int d_max);

// Quadrics and cubics through 12 points, the minimal free resolution of I_A mod p, and the lifted
// comparison maps for the cubic F = F_k, k = 1..8.
struct ResidueFamily {
  std::uint32_t prime = 0;
  std::uint64_t splitting_seed = 0;  // 0 = echelon pseudo-inverse
  std::vector<FormQ> quadrics_q;     // primitive integer forms spanning (I_A)_2
  std::vector<FormQ> cubics_q;       // F_1..F_8, complement of (I_C)_3 in (I_A)_3
  std::vector<FormP> quadrics, cubics;
  std::vector<ModuleMap<std::uint32_t>> resolution;  // d_1..d_4
  std::vector<std::vector<FormP>> lifted;            // [k][m]: G_m for F = F_k, m = 0..6

  std::vector<FormP> generators() const;  // Q_1..Q_3, F_1..F_8
  PrimeField field() const { return PrimeField(prime); }
};

// Rational part only: quadrics and the cubic complement, as primitive integer forms.
void residue_base_q(const PointSet& a, std::vector<FormQ>& quadrics, std::vector<FormQ>& cubics);

ResidueFamily make_residue_family(const PointSet& a, const PrimeField& f, std::uint64_t splitting_seed = 0);

FormP family_cubic(const ResidueFamily& fam, const VecP& lambda);  // sum lambda_k F_k

// F(lambda) followed by G_1..G_7(lambda): the cubic generators of I_Z : I_A, Z = CI(Q, F(lambda)).
std::vector<FormP> lift_cubic(const ResidueFamily& fam, const VecP& lambda);

struct FinalTestSystem {
  MatP matrix;                           // independent rows, 8 columns
  std::vector<std::string> provenance;   // "G3*x1" per row of matrix
  std::size_t raw_rows = 0;
  std::size_t zero_rows = 0;
  std::size_t rank = 0;
  SubP kernel;
  std::size_t selected_rows = 0;         // rows independent modulo (I_Z)_4 at a random parameter
  std::uint64_t hash = 0;
};

// Rows <T, g * x_j> for g in {F(lambda)} and lift_cubic(lambda); requires T orthogonal to (I_A)_4.
FinalTestSystem build_mateqns(const FormQ& t, const PointSet& a, const ResidueFamily& fam);

namespace detail {

template <class F>
Elem<F> small_determinant(const F& f, const std::vector<std::vector<Elem<F>>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Elem<F> s = f.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (f.is_zero(m[0][c])) continue;
    std::vector<std::vector<Elem<F>>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Elem<F>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    auto term = f.mul(m[0][c], small_determinant(f, minor));
    s = c % 2 == 0 ? f.add(s, term) : f.sub(s, term);
  }
  return s;
}

}  // namespace detail

// Cofactor scale kappa(u): the maximal minors of the 4 x 5 Jacobian at a zero u equal kappa * u.
// The Euler-Jacobi weight of u is 1 / kappa.
template <class F>
Elem<F> jacobian_scale(const F& f, const std::vector<Form<Elem<F>>>& gens, const std::vector<Elem<F>>& u) {
  if (gens.size() != kVars - 1 || u.size() != kVars) throw std::invalid_argument("need 4 forms and a point of P^4");
  std::size_t j = 0;
  while (j < u.size() && f.is_zero(u[j])) ++j;
  if (j == u.size()) throw std::invalid_argument("zero point");
  std::vector<std::vector<Elem<F>>> m;
  for (const auto& g : gens) {
    std::vector<Elem<F>> row;
    for (int k = 0; k < kVars; ++k)
      if (k != static_cast<int>(j)) row.push_back(evaluate(f, derivative(f, g, k), u));
    m.push_back(std::move(row));
  }
  auto c = detail::small_determinant(f, m);
  if (j % 2 == 1) c = f.neg(c);
  auto inv = f.inv(u[j]);
  return f.mul(c, *inv);
}

Rational euler_jacobi_weight(const std::vector<FormQ>& gens, const std::vector<Rational>& u);

// Exact system in lambda: w_a kappa_a(lambda) = w_0 kappa_0(lambda) for every a != 0.
MatQ euler_jacobi_system(const PointSet& a, const std::vector<Rational>& weights, const std::vector<FormQ>& quadrics,
                         const std::vector<FormQ>& cubics);

struct ReducednessReport {
  bool reduced = false;
  std::size_t h = 0;
  int degree = 0;
  std::string method;
};

// Zero-dimensional CI of 4 forms: empty singular locus via the 5 Jacobian minors.
ReducednessReport reducedness_certificate(const PrimeField& f, const std::vector<FormP>& gens, int max_degree = 12);

}  // namespace waring
