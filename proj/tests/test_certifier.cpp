#include "doctest.h"
#include "fixtures.hpp"
#include "random_points.hpp"
#include "waring/certifier.hpp"
#include "waring/constructor.hpp"

#include <chrono>

using namespace waring;
using namespace waring::testing;

namespace {

std::string evidence(const Verdict& v, const std::string& key) {
  for (const auto& e : v.evidence)
    if (e.key == key) return e.value;
  return "<missing>";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("identifiable twelve-point example") {
  auto t0 = std::chrono::steady_clock::now();
  Decomposition dec(PointSet(to_points(kIdentifiable12)), std::vector<Rational>(12, Rational(1)));
  auto v = certify(dec);
  MESSAGE("certify took " << seconds_since(t0) << " s");
  CHECK(v.rank_status == RankStatus::Certified);
  CHECK(v.identifiability == Identifiability::Identifiable);
  CHECK(evidence(v, "veronese4.rank") == "12");
  CHECK(evidence(v, "veronese2.maximal_minors") == "455/455 nonzero");
  CHECK(evidence(v, "terracini.rank") == "60");
  CHECK(evidence(v, "mateqns.rank") == "8");
  CHECK(evidence(v, "mateqns.kernel_invariant") == "yes");
  CHECK(evidence(v, "euler_jacobi.rank") == "8");
}

TEST_CASE("regenerated non-identifiable twelve-term instance") {
  auto w = make_nonidentifiable_12(1);
  auto t0 = std::chrono::steady_clock::now();
  auto v = certify(w.decomposition);
  MESSAGE("certify took " << seconds_since(t0) << " s, reason " << v.reason);
  CHECK(v.rank_status == RankStatus::Certified);
  REQUIRE(v.identifiability == Identifiability::NotIdentifiable);
  REQUIRE(v.witness);
  CHECK(evidence(v, "mateqns.rank") == "7");
  CHECK(v.witness->b_hvector == std::vector<long>{1, 4, 7});
}

TEST_CASE("thirteen points: generic and non-disjoint") {
  auto t0 = std::chrono::steady_clock::now();
  auto generic = certify(random_decomposition(13, 5));
  MESSAGE("generic r=13 took " << seconds_since(t0) << " s: " << generic.reason);
  CHECK(generic.rank_status == RankStatus::Certified);
  CHECK(generic.identifiability == Identifiability::Undetermined);

  t0 = std::chrono::steady_clock::now();
  auto n = make_nondisjoint_13(2);
  auto v = certify(n.decomposition);
  MESSAGE("non-disjoint r=13 took " << seconds_since(t0) << " s: " << v.reason);
  CHECK(v.rank_status == RankStatus::Certified);
  REQUIRE(v.identifiability == Identifiability::NotIdentifiable);
  for (const auto& s : v.subproblems)
    CHECK(s.identifiability == (s.removed == n.planted ? Identifiability::NotIdentifiable : Identifiability::Identifiable));
  CHECK(v.witness->shared_point == n.planted);
}

TEST_CASE("dispatch for small r") {
  auto eight = certify(random_decomposition(8, 1));
  CHECK(eight.rank_status == RankStatus::Certified);
  CHECK(eight.identifiability == Identifiability::Identifiable);
  auto nine = certify(random_decomposition(9, 1));
  CHECK(nine.identifiability == Identifiability::Identifiable);
  CHECK(evidence(nine, "terracini.rank") == "45");
  for (std::size_t r : {10, 11}) {
    auto v = certify(random_decomposition(r, 3));
    CHECK(v.rank_status == RankStatus::Certified);
    CHECK(v.identifiability == Identifiability::Identifiable);
    CHECK(v.conditions->base_locus.ok);
  }
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(certify(random_decomposition(14, 1)), InputError);
  try {
    certify(random_decomposition(15, 1));
  } catch (const InputError& e) {
    CHECK(std::string(e.what()) == kExcludedMessage);
  }
}

TEST_CASE("a planted shorter expression is never certified as rank 13") {
  // eight general points plus five collinear points whose terms sum to a single fourth power
  auto base = random_points(8, 31);
  std::vector<ProjectivePoint> pts(base.points().begin(), base.points().end());
  std::vector<Rational> p = {3, -1, 4, 1, -5}, q = {2, 7, -1, 8, 2};
  auto on_line = [&](long s, long t) {
    std::vector<Rational> u;
    for (int j = 0; j < 5; ++j) u.push_back(s * p[j] + t * q[j]);
    return ProjectivePoint(u);
  };
  std::vector<ProjectivePoint> line = {on_line(1, 0), on_line(0, 1), on_line(1, 1), on_line(1, 2), on_line(2, -1)};
  PointSet five(line);
  RationalField field;
  FormQ target{4, veronese(field, on_line(3, 5).raw(), 4)};
  auto rec = recover_weights(target, five);
  REQUIRE(rec.in_span);
  std::vector<Rational> w(8, Rational(1));
  for (const auto& x : rec.weights) w.push_back(x);
  pts.insert(pts.end(), line.begin(), line.end());
  bool nonzero = true;
  for (const auto& x : w) nonzero = nonzero && x != 0;
  REQUIRE(nonzero);
  auto v = certify(Decomposition(PointSet(pts), w));
  CHECK(v.rank_status == RankStatus::Inconclusive);
  CHECK(v.identifiability == Identifiability::CannotHandle);
  CHECK_FALSE(v.conditions->kruskal1.ok);
}

TEST_CASE("soundness gate on a degenerate twelve-point set") {
  // six of the points on a hyperplane: (ii) fails, so no identifiability claim
  auto a = random_points(12, 40);
  std::vector<ProjectivePoint> pts(a.points().begin(), a.points().end());
  for (std::size_t i = 0; i < 6; ++i) {
    auto u = pts[i].raw();
    u[4] = 0;
    pts[i] = ProjectivePoint(u);
  }
  auto v = certify(Decomposition(PointSet(pts), std::vector<Rational>(12, Rational(1))));
  CHECK(v.identifiability != Identifiability::Identifiable);
  CHECK(v.rank_status == RankStatus::Inconclusive);
}
