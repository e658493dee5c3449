#include "doctest.h"
#include "fixtures.hpp"
#include "waring/linalg.hpp"
#include "waring/poly.hpp"

#include <random>

using namespace waring;

namespace {

MatQ random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long box) {
  std::uniform_int_distribution<long> d(-box, box);
  MatQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rational(d(rng), 1 + std::abs(d(rng)) % 5);
      m(i, j).canonicalize();
    }
  return m;
}

// Product of a random r x k and k x c matrix: rank min(k, ...) generically.
MatQ low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  RationalField f;
  return multiply(f, random_matrix(rng, r, k, 9), random_matrix(rng, k, c, 9));
}

MatQ veronese_matrix(int d) {
  RationalField f;
  MatQ m;
  for (const auto& p : testing::to_points(testing::kIdentifiable12)) m.append_row(veronese(f, p.raw(), d));
  return m;
}

MatQ coordinate_matrix() {
  MatQ m;
  for (const auto& p : testing::to_points(testing::kIdentifiable12)) m.append_row(p.raw());
  return m;
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
  RationalField q;
  PrimeField p;
  MatQ id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(rank(q, id) == 3);
  CHECK(rank(q, MatQ(4, 6)) == 0);
  CHECK(rank(p, MatP(4, 6)) == 0);
  CHECK(kernel(q, id).dim() == 0);
}

TEST_CASE("kernel of [1 1]") {
  RationalField q;
  MatQ m(1, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  auto k = kernel(q, m);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis[0] == VecQ{1, -1});
}

TEST_CASE("rref is canonical and matches across fields") {
  std::mt19937_64 rng(3);
  RationalField q;
  PrimeField p;
  for (int t = 0; t < 20; ++t) {
    auto m = low_rank(rng, 7, 9, 1 + t % 6);
    auto e = rref(q, m);
    CHECK(e.rank() == static_cast<std::size_t>(1 + t % 6));
    for (std::size_t i = 0; i < e.rank(); ++i) {
      CHECK(e.rows[i][e.pivots[i]] == 1);
      for (std::size_t k = 0; k < e.rank(); ++k)
        if (k != i) CHECK(e.rows[k][e.pivots[i]] == 0);
    }
    auto mp = *reduce_mod(p, m);
    auto ep = rref(p, mp);
    CHECK(ep.pivots == e.pivots);
    for (std::size_t i = 0; i < e.rank(); ++i) CHECK(ep.rows[i] == *reduce_mod(p, e.rows[i]));
    // rows of the rref span the row space
    CHECK(rank(q, m) == e.rank());
  }
}

TEST_CASE("rank plus kernel dimension equals column count") {
  std::mt19937_64 rng(5);
  RationalField q;
  PrimeField p;
  for (int t = 0; t < 25; ++t) {
    std::size_t r = 2 + t % 7, c = 3 + (t * 5) % 8, k = 1 + t % 5;
    auto m = low_rank(rng, r, c, k);
    auto ker = kernel(q, m);
    CHECK(ker.dim() + rank(q, m) == c);
    for (const auto& v : ker.basis)
      for (const auto& x : apply(q, m, v)) CHECK(x == 0);
    auto mp = *reduce_mod(p, m);
    CHECK(kernel(p, mp).dim() + rank(p, mp) == c);
    CHECK(rank(p, mp) <= rank(q, m));
  }
}

TEST_CASE("modular rank never exceeds rational rank") {
  // 3 * (p) in one entry collapses rank modulo p only.
  RationalField q;
  PrimeField p(2147483629u);
  MatQ m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = Rational(6) + Integer(2147483629u);
  CHECK(rank(q, m) == 2);
  CHECK(rank(p, *reduce_mod(p, m)) == 1);
  FieldPolicy policy;
  auto cert = certified_rank(m, policy);
  CHECK(cert.rank == 2);
  CHECK(cert.method.rfind("modp:", 0) == 0);
  CHECK(cert.method != "modp:2147483629");
  policy.modular = false;
  CHECK(certified_rank(m, policy).method == "rational");
}

TEST_CASE("determinants") {
  RationalField q;
  PrimeField p;
  MatQ m(3, 3);
  long vals[9] = {2, -1, 0, -1, 2, -1, 0, -1, 2};
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = vals[i];
  CHECK(determinant(q, m) == 4);
  CHECK(*determinant(p, *reduce_mod(p, m)) == 4);
  m(2, 2) = Rational(1, 2);
  CHECK(determinant(q, m) == Rational(-1, 2));
  MatQ s(2, 2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  CHECK(determinant(q, s) == -1);
}

TEST_CASE("solve with consistent and inconsistent right-hand sides") {
  std::mt19937_64 rng(9);
  RationalField q;
  auto a = low_rank(rng, 6, 5, 3);
  VecQ x0 = {1, -2, Rational(1, 3), 0, 4};
  auto b = apply(q, a, x0);
  auto x = solve(q, a, b);
  REQUIRE(x.has_value());
  CHECK(apply(q, a, *x) == b);
  VecQ bad = b;
  bool found = false;
  for (int i = 0; i < 6 && !found; ++i) {
    bad[i] += 1;
    found = !solve(q, a, bad).has_value();
  }
  CHECK(found);
}

TEST_CASE("subspace calculus") {
  RationalField q;
  auto e = [](int i) {
    VecQ v(4);
    v[i] = 1;
    return v;
  };
  auto u = span(q, 4, {e(0), e(1)});
  auto v = span(q, 4, {e(2), e(3)});
  CHECK(subspace_sum(q, u, v).dim() == 4);
  CHECK(subspace_intersect(q, u, v).dim() == 0);
  CHECK(subspace_sum(q, u, u) == u);
  CHECK(subspace_intersect(q, u, u) == u);
  CHECK(contains(q, u, VecQ{3, -1, 0, 0}));
  CHECK(!contains(q, u, VecQ{3, -1, 1, 0}));
  CHECK_THROWS(subspace_sum(q, u, span(q, 3, {VecQ{1, 0, 0}})));
}

TEST_CASE("dimension formula on random subspaces") {
  std::mt19937_64 rng(21);
  RationalField q;
  PrimeField p;
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 8;
    auto shared = random_matrix(rng, 1 + t % 3, n, 20);
    auto a = random_matrix(rng, 2 + t % 3, n, 20);
    auto b = random_matrix(rng, 1 + t % 4, n, 20);
    std::vector<VecQ> ua, ub;
    for (std::size_t i = 0; i < shared.rows(); ++i) ua.push_back(shared.row(i)), ub.push_back(shared.row(i));
    for (std::size_t i = 0; i < a.rows(); ++i) ua.push_back(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) ub.push_back(b.row(i));
    auto u = span(q, n, ua), v = span(q, n, ub);
    auto s = subspace_sum(q, u, v), x = subspace_intersect(q, u, v);
    CHECK(s.dim() == u.dim() + v.dim() - x.dim());
    CHECK(contains(q, u, x));
    CHECK(contains(q, v, x));
    CHECK(contains(q, s, u));
    auto up = span(p, n, {*reduce_mod(p, ua[0])});
    CHECK(up.dim() == 1);
  }
}

TEST_CASE("maximal minors") {
  RationalField q;
  auto coords = coordinate_matrix();
  auto scan = all_maximal_minors_nonzero(q, coords);
  CHECK(scan.all_nonzero);
  CHECK(scan.checked == 792);
  CHECK(scan.total == 792);

  auto v2 = veronese_matrix(2);
  CHECK(v2.rows() == 12);
  CHECK(v2.cols() == 15);
  auto scan2 = all_maximal_minors_nonzero(q, v2);
  CHECK(scan2.all_nonzero);
  CHECK(scan2.checked == 455);

  MatQ rep = coords;
  rep.append_row(coords.row(3));
  auto bad = all_maximal_minors_nonzero(q, rep);
  CHECK(!bad.all_nonzero);
  CHECK(bad.witness.size() == 5);
  PrimeField p;
  auto badp = all_maximal_minors_nonzero(p, *reduce_mod(p, rep));
  CHECK(!badp.all_nonzero);
  CHECK(badp.witness == bad.witness);
}

TEST_CASE("veronese matrix of the identifiable configuration") {
  RationalField q;
  auto v4 = veronese_matrix(4);
  CHECK(rank(q, v4) == 12);
  FieldPolicy policy;
  auto cert = certified_rank(v4, policy);
  CHECK(cert.rank == 12);
  CHECK(cert.method == "modp:2147483629");
  CHECK(kernel(q, veronese_matrix(2)).dim() == 3);
}

TEST_CASE("subset enumeration and hashing") {
  int count = 0;
  for_each_subset(6, 3, [&](const std::vector<std::size_t>&) { return ++count, true; });
  CHECK(count == 20);
  CHECK(binomial(12, 5) == 792);
  CHECK(binomial(15, 12) == 455);
  MatQ a(2, 2), b(2, 2);
  b(1, 1) = 1;
  CHECK(matrix_hash(a) != matrix_hash(b));
  CHECK(matrix_hash(a) == matrix_hash(MatQ(2, 2)));
}
