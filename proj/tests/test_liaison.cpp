#include "doctest.h"
#include "fixtures.hpp"
#include "random_points.hpp"
#include "waring/liaison.hpp"

#include <random>

using namespace waring;
using namespace waring::testing;

namespace {

const PrimeField kF(kDefaultPrime);

VecP random_params(std::mt19937_64& rng, std::size_t n = 8) {
  std::uniform_int_distribution<std::uint32_t> d(1, kF.modulus() - 1);
  VecP v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Product of linear forms with the given integer coefficient rows.
FormQ product_of(const std::vector<std::vector<long>>& rows) {
  RationalField q;
  FormQ acc{0, {Rational(1)}};
  for (const auto& r : rows) {
    std::vector<Rational> c(r.begin(), r.end());
    acc = multiply(q, acc, linear_form(q, c));
  }
  return acc;
}

}  // namespace

TEST_CASE("complete intersection certificates") {
  auto a = uniform_points(12, 11);
  std::vector<FormQ> qs, cs;
  residue_base_q(a, qs, cs);
  auto gens = forms_mod_p(kF, qs);
  gens.push_back(to_field(kF, cs[0]));
  auto ci = certify_ci(kF, gens);
  CHECK(ci.type == std::vector<int>{2, 2, 2, 3});
  CHECK(ci.h_vector == std::vector<long>{1, 4, 7, 7, 4, 1});
  CHECK(ci.hilbert[4] == 23);
  CHECK(ci.hilbert.back() == 24);

  // x0 divides all three quadrics
  std::vector<FormP> bad;
  for (int j = 1; j <= 3; ++j) bad.push_back(multiply(kF, variable(kF, 0), variable(kF, j)));
  bad.push_back(to_field(kF, cs[0]));
  try {
    certify_ci(kF, bad);
    FAIL("expected NotProper");
  } catch (const NotProper& e) {
    CHECK(e.degree == 3);
  }

  std::vector<FormP> two = {variable(kF, 0), variable(kF, 1), variable(kF, 2),
                            add(kF, multiply(kF, variable(kF, 3), variable(kF, 3)),
                                scale(kF, kF.neg(1), multiply(kF, variable(kF, 4), variable(kF, 4))))};
  auto line = certify_ci(kF, two);
  CHECK(line.h_vector == std::vector<long>{1, 1});
  CHECK(line.hilbert == std::vector<std::size_t>{1, 2, 2});
  CHECK_THROWS_AS(certify_ci(kF, {variable(kF, 0)}), std::invalid_argument);
}

TEST_CASE("residue of 12 general points in a CI(2,2,2,3)") {
  auto a = uniform_points(12, 12);
  std::vector<FormQ> qs, cs;
  residue_base_q(a, qs, cs);
  auto gens = forms_mod_p(kF, qs);
  std::mt19937_64 rng(5);
  auto lam = random_params(rng);
  auto f = zero_form(kF, 3);
  for (std::size_t k = 0; k < 8; ++k) f = add(kF, f, scale(kF, lam[k], to_field(kF, cs[k])));
  gens.push_back(f);
  auto ci = certify_ci(kF, gens);
  auto pieces = residue_points_ideal(kF, ci, a, 4);
  CHECK(pieces[1].dim() == 0);
  CHECK(pieces[2].dim() == 3);
  CHECK(pieces[3].dim() == 23);
  CHECK(pieces[4].dim() == 58);
  auto ia4 = ideal_piece(kF, a, 4);
  CHECK(subspace_intersect(kF, pieces[4].space, ia4.space).dim() == 47);
  CHECK(generated_piece(kF, gens, 4).dim() == 47);
  CHECK(reducedness_certificate(kF, gens).reduced);

  // residue of the whole CI in itself is the unit ideal
  std::vector<FormP> unit = {variable(kF, 0), variable(kF, 1), variable(kF, 2),
                             multiply(kF, variable(kF, 3), variable(kF, 4))};
  auto small = certify_ci(kF, unit);
  PointSet both({ProjectivePoint({0, 0, 0, 1, 0}), ProjectivePoint({0, 0, 0, 0, 1})});
  auto whole = residue_points_ideal(kF, small, both, 2);
  CHECK(whole[0].dim() == 1);
  CHECK(whole[2].dim() == 15);
}

TEST_CASE("non-reduced CI fails the reducedness certificate") {
  // x0, x1, x2, x3^2 is a double point
  std::vector<FormP> gens = {variable(kF, 0), variable(kF, 1), variable(kF, 2),
                             multiply(kF, variable(kF, 3), variable(kF, 3))};
  CHECK_FALSE(reducedness_certificate(kF, gens).reduced);
}

TEST_CASE("residue family lifting") {
  auto a = uniform_points(12, 13);
  auto fam = make_residue_family(a, kF);
  CHECK(fam.quadrics.size() == 3);
  CHECK(fam.cubics.size() == 8);
  CHECK(fam.lifted.size() == 8);
  CHECK(fam.lifted[0].size() == 7);
  CHECK(fam.resolution[1].source.rank() == 27);
  CHECK(fam.resolution[2].source.rank() == 24);
  CHECK(fam.resolution[3].source.rank() == 7);
  auto other = make_residue_family(a, kF, 77);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    auto lam = random_params(rng);
    auto cubics = lift_cubic(fam, lam);
    CHECK(cubics.size() == 8);
    auto gens = fam.quadrics;
    gens.push_back(cubics[0]);
    auto direct = colon_piece(kF, gens, fam.generators(), 3);
    auto mine = fam.quadrics;
    mine.insert(mine.end(), cubics.begin(), cubics.end());
    auto lifted = generated_piece(kF, mine, 3);
    CHECK(lifted.dim() == 23);
    CHECK(lifted.space == direct.space);
    auto alt = lift_cubic(other, lam);
    auto mine2 = fam.quadrics;
    mine2.insert(mine2.end(), alt.begin(), alt.end());
    CHECK(generated_piece(kF, mine2, 3).space == lifted.space);
    if (trial == 0) {
      bool differ = false;
      for (std::size_t m = 1; m < 8; ++m) differ = differ || alt[m].coeffs != cubics[m].coeffs;
      CHECK(differ);
    }
  }
  CHECK_THROWS_AS(lift_cubic(fam, VecP(8, 0)), std::invalid_argument);
}

TEST_CASE("final test system on the identifiable example") {
  PointSet a(to_points(kIdentifiable12));
  auto t = power_sum(a, std::vector<Rational>(12, Rational(1)));
  auto fam = make_residue_family(a, kF);
  auto sys = build_mateqns(t, a, fam);
  CHECK(sys.raw_rows == 45);
  CHECK(sys.zero_rows >= 10);
  CHECK(sys.rank == 8);
  CHECK(sys.kernel.dim() == 0);
  CHECK(sys.selected_rows == 11);
  auto sys2 = build_mateqns(t, a, make_residue_family(a, kF, 4242));
  CHECK(sys2.kernel == sys.kernel);

  // independent exact oracle: the Euler-Jacobi weight system has full column rank
  RationalField q;
  auto ej = euler_jacobi_system(a, std::vector<Rational>(12, Rational(1)), fam.quadrics_q, fam.cubics_q);
  CHECK(ej.rows() == 11);
  CHECK(rank(q, ej) == 8);

  FormQ random{4, std::vector<Rational>(70)};
  std::mt19937_64 rng(3);
  for (auto& c : random.coeffs) c = static_cast<long>(rng() % 1000);
  CHECK_THROWS_AS(build_mateqns(random, a, fam), std::invalid_argument);
}

TEST_CASE("Euler-Jacobi relation on a split complete intersection") {
  RationalField q;
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-9, 9);
  auto row = [&] {
    std::vector<long> r(5);
    for (auto& x : r) x = d(rng);
    return r;
  };
  std::vector<std::vector<std::vector<long>>> factors(4);
  const int degs[4] = {2, 2, 2, 3};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < degs[i]; ++k) factors[i].push_back(row());
  std::vector<FormQ> gens;
  for (const auto& fs : factors) gens.push_back(product_of(fs));
  std::vector<std::vector<Rational>> pts;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 3; ++e) {
          MatQ m(4, 5);
          const std::vector<long>* rs[4] = {&factors[0][a], &factors[1][b], &factors[2][c], &factors[3][e]};
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) m(i, j) = (*rs[i])[j];
          auto k = kernel(q, m);
          REQUIRE(k.dim() == 1);
          pts.push_back(k.basis[0]);
        }
  REQUIRE(pts.size() == 24);
  std::vector<Rational> c;
  for (const auto& u : pts) c.push_back(euler_jacobi_weight(gens, u));
  for (int trial = 0; trial < 5; ++trial) {
    FormQ g{4, std::vector<Rational>(70)};
    for (auto& x : g.coeffs) x = d(rng);
    Rational s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) s += c[i] * evaluate(q, g, pts[i]);
    CHECK(s == 0);
  }
}
