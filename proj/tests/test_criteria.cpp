#include "doctest.h"
#include "fixtures.hpp"
#include "random_points.hpp"
#include "waring/criteria.hpp"

using namespace waring;
using namespace waring::testing;

namespace {

Decomposition unit_weights(const PointSet& a, int degree = 4) {
  return Decomposition(a, std::vector<Rational>(a.size(), Rational(1)), degree);
}

// First `on_plane` points have x4 = 0.
PointSet with_hyperplane(std::size_t r, std::size_t on_plane, std::uint64_t seed) {
  auto a = uniform_points(r, seed);
  std::vector<ProjectivePoint> pts;
  for (std::size_t i = 0; i < r; ++i) {
    auto c = a[i].raw();
    if (i < on_plane) c[4] = 0;
    pts.emplace_back(c);
  }
  return PointSet(pts);
}

}  // namespace

TEST_CASE("Kruskal ranks of the identifiable configuration") {
  auto a = PointSet(to_points(kIdentifiable12));
  auto k1 = kruskal_rank(a, 1);
  CHECK(k1.k == 5);
  CHECK(k1.subsets_checked == 792);
  CHECK(kruskal_rank(a, 2).k == 12);
}

TEST_CASE("Kruskal rank of collinear points") {
  PointSet a({ProjectivePoint({1, 0, 0, 0, 0}), ProjectivePoint({0, 1, 0, 0, 0}), ProjectivePoint({1, 1, 0, 0, 0})});
  auto k = kruskal_rank(a, 1);
  CHECK(k.k == 2);
  CHECK(k.witness.size() == 3);
}

TEST_CASE("Kruskal witness is a dependent subset") {
  auto a = with_hyperplane(12, 6, 5);
  auto k = kruskal_rank(a, 1);
  CHECK(k.k == 4);
  REQUIRE(k.witness.size() == 5);
  RationalField q;
  CHECK(rank(q, evaluation_matrix(q, a.subset(k.witness), 1)) < 5);
}

TEST_CASE("reshaped Kruskal criterion") {
  auto r8 = reshaped_kruskal(unit_weights(uniform_points(8, 80)), 4);
  CHECK(r8.verdict == CriterionVerdict::Identifiable);
  CHECK(r8.best_partition == std::vector<int>{2, 1, 1});
  CHECK(r8.best_bound == 8);
  auto r9 = reshaped_kruskal(unit_weights(uniform_points(9, 90)), 4);
  CHECK(r9.verdict == CriterionVerdict::Inconclusive);
  CHECK(r9.best_bound < 9);
  auto r2 = reshaped_kruskal(unit_weights(uniform_points(2, 20), 3), 3);
  CHECK(r2.verdict == CriterionVerdict::Identifiable);
  CHECK(r2.best_bound == 2);
}

TEST_CASE("reshaped Kruskal never certifies beyond every partition bound") {
  for (std::size_t r = 1; r <= 12; ++r) {
    auto res = reshaped_kruskal(unit_weights(uniform_points(r, 1000 + r)), 4);
    bool beyond = Rational(static_cast<long>(r)) > res.best_bound;
    CHECK((res.verdict == CriterionVerdict::Identifiable) == !beyond);
  }
}

TEST_CASE("reshaped Kruskal rejects redundant input") {
  // five points on a line: binary cubics form a 4-dimensional space
  PointSet line({ProjectivePoint({1, 0, 0, 0, 0}), ProjectivePoint({0, 1, 0, 0, 0}), ProjectivePoint({1, 1, 0, 0, 0}),
                 ProjectivePoint({1, -1, 0, 0, 0}), ProjectivePoint({2, 1, 0, 0, 0})});
  Decomposition dec(line, {1, 1, 1, 1, 1}, 3);
  CHECK(redundant_point(dec).has_value());
  CHECK_THROWS_AS(reshaped_kruskal(dec, 3), std::invalid_argument);
  CHECK(!redundant_point(unit_weights(uniform_points(5, 3), 3)).has_value());
}

TEST_CASE("Terracini dimensions") {
  auto a = PointSet(to_points(kIdentifiable12));
  auto t = terracini_dim(a, 4);
  CHECK(t.rank == 60);
  CHECK(terracini_matrix(a, 4).rows() == 60);
  CHECK(terracini_dim(uniform_points(13, 130), 4).rank == 65);
  auto t14 = terracini_dim(uniform_points(14, 140), 4);
  CHECK(t14.rank == 69);
  CHECK(t14.method == "rational");
  for (std::size_t r : {3, 8, 11}) CHECK(terracini_dim(uniform_points(r, r), 4).rank == 5 * r);
}

TEST_CASE("2n+1 criterion for nine points") {
  auto good = quartic_2n1_criterion(unit_weights(uniform_points(9, 91)));
  CHECK(good.verdict == CriterionVerdict::Identifiable);
  CHECK(good.terracini_rank == 45);
  CHECK(good.k1 == 5);
  CHECK(good.veronese_rank == 9);
  auto bad = quartic_2n1_criterion(unit_weights(with_hyperplane(9, 6, 92)));
  CHECK(bad.verdict == CriterionVerdict::Inconclusive);
  CHECK(bad.k1 < 5);
  CHECK_THROWS(quartic_2n1_criterion(unit_weights(uniform_points(8, 93))));
}

TEST_CASE("condition battery on the identifiable configuration") {
  auto a = PointSet(to_points(kIdentifiable12));
  LocusCache cache;
  auto rep = condition_battery(unit_weights(a), BatteryLevel::V, {}, &cache);
  CHECK(rep.non_redundant.ok);
  CHECK(rep.kruskal1.ok);
  CHECK(rep.kruskal2.ok);
  CHECK(rep.base_locus_prime.ok);
  CHECK(rep.curve.ok);
  CHECK(rep.all_evaluated_ok());
  CHECK(rep.weights == std::vector<Rational>(12, Rational(1)));
  bool minors = false;
  for (const auto& e : rep.evidence)
    if (e.key == "veronese2.maximal_minors") minors = e.value == "455/455 nonzero";
  CHECK(minors);
  CHECK(cache.computed() == 13);
}

TEST_CASE("condition battery on generic eleven points") {
  auto rep = condition_battery(unit_weights(uniform_points(11, 111)), BatteryLevel::IV);
  CHECK(rep.base_locus.ok);
  CHECK(rep.base_locus.detail == "finite(16)");
  CHECK(rep.all_evaluated_ok());
}

TEST_CASE("condition battery detects a hyperplane cluster") {
  auto rep = condition_battery(unit_weights(with_hyperplane(12, 6, 121)), BatteryLevel::IVPrime);
  CHECK(!rep.kruskal1.ok);
  CHECK(rep.kruskal1.detail.find("dependent subset") != std::string::npos);
}

TEST_CASE("smoothness certificate") {
  PrimeField f;
  for (std::uint64_t seed : {1, 2, 3}) {
    auto quadrics = ideal_piece(f, uniform_points(12, 7000 + seed), 2).forms();
    CHECK(smoothness_certificate(f, quadrics).smooth);
  }
  // a cone over a curve is singular at its vertex
  std::vector<FormP> cone;
  auto base = ideal_piece(f, uniform_points(12, 7100), 2).forms();
  for (auto& q : base) {
    // drop every monomial containing x4: the quadrics no longer involve x4
    for (std::size_t i = 0; i < q.coeffs.size(); ++i)
      if (monomials(2)[i][4] > 0) q.coeffs[i] = 0;
    cone.push_back(q);
  }
  CHECK(!smoothness_certificate(f, cone).smooth);
}
