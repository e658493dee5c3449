#include "doctest.h"
#include "fixtures.hpp"
#include "waring/poly.hpp"

#include <random>

using namespace waring;

namespace {

std::vector<Rational> random_point(std::mt19937_64& rng, long box = 50) {
  std::uniform_int_distribution<long> d(-box, box);
  std::vector<Rational> u(5);
  for (auto& x : u) x = d(rng);
  if (u[0] == 0) u[0] = 1;
  return u;
}

FormQ random_form(std::mt19937_64& rng, int deg, long box = 30) {
  std::uniform_int_distribution<long> d(-box, box);
  FormQ g = zero_form(RationalField{}, deg);
  for (auto& c : g.coeffs) c = d(rng);
  return g;
}

}  // namespace

TEST_CASE("graded dimensions") {
  CHECK(dim_graded(0) == 1);
  CHECK(dim_graded(2) == 15);
  CHECK(dim_graded(4) == 70);
  CHECK(dim_graded(10) == 1001);
  for (int d = 0; d <= 8; ++d) CHECK(monomials(d).size() == dim_graded(d));
}

TEST_CASE("graded lex order and indexing") {
  const auto& m2 = monomials(2);
  CHECK(m2.front() == Exponents{2, 0, 0, 0, 0});
  CHECK(m2[1] == Exponents{1, 1, 0, 0, 0});
  CHECK(m2[5] == Exponents{0, 2, 0, 0, 0});
  CHECK(m2.back() == Exponents{0, 0, 0, 0, 2});
  for (int d = 0; d <= 7; ++d) {
    const auto& ms = monomials(d);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      CHECK(monomial_index(ms[i]) == i);
      if (i > 0) CHECK(ms[i - 1] > ms[i]);
    }
  }
}

TEST_CASE("veronese coordinates") {
  RationalField q;
  auto v = veronese(q, {1, 0, 0, 0, 0}, 4);
  CHECK(v[0] == 1);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] == 0);
  auto w = veronese(q, {1, 1, 0, 0, 0}, 2);
  CHECK(w[monomial_index({2, 0, 0, 0, 0})] == 1);
  CHECK(w[monomial_index({1, 1, 0, 0, 0})] == 2);
  CHECK(w[monomial_index({0, 2, 0, 0, 0})] == 1);
  Rational s = 0;
  for (auto& x : w) s += x;
  CHECK(s == 4);
  CHECK_THROWS(veronese(q, {0, 0, 0, 0, 0}, 2));
}

TEST_CASE("veronese equals power of the linear form") {
  std::mt19937_64 rng(2);
  RationalField q;
  for (int t = 0; t < 10; ++t) {
    auto u = random_point(rng);
    auto l = linear_form(q, u);
    auto pw = l;
    for (int d = 2; d <= 4; ++d) {
      pw = multiply(q, pw, l);
      CHECK(pw.coeffs == veronese(q, u, d));
    }
  }
}

TEST_CASE("multiplication") {
  RationalField q;
  auto x0 = variable(q, 0), x1 = variable(q, 1);
  CHECK(multiply(q, x0, x1).coeffs == monomial_form(q, {1, 1, 0, 0, 0}).coeffs);
  auto a = add(q, x0, x1), b = add(q, x0, scale(q, Rational(-1), x1));
  auto prod = multiply(q, a, b);
  auto expect = add(q, monomial_form(q, {2, 0, 0, 0, 0}), scale(q, Rational(-1), monomial_form(q, {0, 2, 0, 0, 0})));
  CHECK(prod.coeffs == expect.coeffs);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(4);
  RationalField q;
  PrimeField p;
  for (int t = 0; t < 5; ++t) {
    auto f = random_form(rng, 1 + t % 3), g = random_form(rng, 2 + t % 2);
    auto fg = multiply(q, f, g);
    for (int k = 0; k < 20; ++k) {
      auto u = random_point(rng);
      CHECK(evaluate(q, fg, u) == evaluate(q, f, u) * evaluate(q, g, u));
    }
    auto fp = to_field(p, f), gp = to_field(p, g);
    auto u = coords(p, ProjectivePoint(random_point(rng)));
    CHECK(evaluate(p, multiply(p, fp, gp), u) == p.mul(evaluate(p, fp, u), evaluate(p, gp, u)));
  }
}

TEST_CASE("multiplication matrix agrees with multiply") {
  std::mt19937_64 rng(6);
  RationalField q;
  auto f = random_form(rng, 2);
  auto g = random_form(rng, 3);
  auto m = multiplication_matrix(q, f, 3);
  CHECK(m.rows() == dim_graded(5));
  CHECK(apply(q, m, g.coeffs) == multiply(q, f, g).coeffs);
}

TEST_CASE("apolar pairing normalization") {
  RationalField q;
  auto x04 = monomial_form(q, {4, 0, 0, 0, 0});
  CHECK(apolar_pair(q, x04, x04) == 24);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    auto g = random_form(rng, 4);
    auto u = random_point(rng);
    FormQ l4{4, veronese(q, u, 4)};
    CHECK(apolar_pair(q, g, l4) == 24 * evaluate(q, g, u));
  }
}

TEST_CASE("quadrics through points are apolar to the span") {
  // <q x_j, T> = 0 for every quadric q through A and T in span v4(A)
  RationalField q;
  std::mt19937_64 rng(10);
  std::vector<std::vector<Rational>> pts;
  for (int i = 0; i < 12; ++i) pts.push_back(random_point(rng, 20));
  MatQ ev;
  for (const auto& u : pts) ev.append_row(monomial_values(q, u, 2));
  auto quadrics = kernel(q, ev);
  REQUIRE(quadrics.dim() == 3);
  FormQ t = zero_form(q, 4);
  for (const auto& u : pts) t = add(q, t, scale(q, Rational(1 + static_cast<long>(rng() % 7)), FormQ{4, veronese(q, u, 4)}));
  int checked = 0;
  for (const auto& c : quadrics.basis)
    for (int j = 0; j < 5; ++j) {
      // the cubic q*x_j contracts T to the zero linear form
      auto cubic = multiply(q, FormQ{2, c}, variable(q, j));
      for (int k = 0; k < 5; ++k) CHECK(apolar_pair(q, multiply(q, cubic, variable(q, k)), t) == 0);
      ++checked;
    }
  CHECK(checked == 15);
}

TEST_CASE("catalecticant") {
  RationalField q;
  auto cat = catalecticant(q, monomial_form(q, {4, 0, 0, 0, 0}), 2, 2);
  CHECK(rank(q, cat) == 1);
  CHECK_THROWS(catalecticant(q, monomial_form(q, {4, 0, 0, 0, 0}), 1, 2));

  std::mt19937_64 rng(12);
  for (int r : {12, 13}) {
    std::vector<std::vector<Rational>> pts;
    FormQ t = zero_form(q, 4);
    MatQ ev;
    for (int i = 0; i < r; ++i) {
      pts.push_back(random_point(rng, 40));
      t = add(q, t, scale(q, Rational(1 + i), FormQ{4, veronese(q, pts.back(), 4)}));
      ev.append_row(monomial_values(q, pts.back(), 2));
    }
    auto c = catalecticant(q, t, 2, 2);
    CHECK(c == c.transpose());
    CHECK(rank(q, c) == static_cast<std::size_t>(r));
    auto k = kernel(q, c);
    CHECK(k.dim() == static_cast<std::size_t>(15 - r));
    CHECK(k == kernel(q, ev));
  }
}

TEST_CASE("graded piece of a module map") {
  RationalField q;
  std::mt19937_64 rng(14);
  auto f1 = random_form(rng, 2), f2 = random_form(rng, 3);
  ModuleMap<Rational> m{{{2, 3}}, {{0}}, {{f1, f2}}};
  auto mat = graded_piece(q, m, 4);
  CHECK(mat.rows() == 70);
  CHECK(mat.cols() == 15 + 5);
  auto g1 = random_form(rng, 2), g2 = random_form(rng, 1);
  VecQ v = g1.coeffs;
  v.insert(v.end(), g2.coeffs.begin(), g2.coeffs.end());
  auto expect = add(q, multiply(q, f1, g1), multiply(q, f2, g2));
  CHECK(apply(q, mat, v) == expect.coeffs);
  auto parts = split_components(q, m.source, 4, v);
  CHECK(parts[0].coeffs == g1.coeffs);
  CHECK(parts[1].coeffs == g2.coeffs);
}

TEST_CASE("projective points") {
  ProjectivePoint a({2, 4, 0, 0, 6}), b({1, 2, 0, 0, 3}), c({0, 0, -2, 1, 0});
  CHECK(a == b);
  CHECK(a.raw()[0] == 2);
  CHECK(c.canonical()[2] == 1);
  CHECK(c.canonical()[3] == Rational(-1, 2));
  CHECK_THROWS(ProjectivePoint({0, 0, 0, 0, 0}));
  CHECK_THROWS(ProjectivePoint({1, 2, 3}));
}

TEST_CASE("derivatives and Euler identity") {
  RationalField q;
  std::mt19937_64 rng(16);
  auto g = random_form(rng, 3);
  auto u = random_point(rng);
  Rational s = 0;
  for (int i = 0; i < 5; ++i) s += u[i] * evaluate(q, derivative(q, g, i), u);
  CHECK(s == 3 * evaluate(q, g, u));
}
