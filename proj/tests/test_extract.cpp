#include "doctest.h"
#include "waring/constructor.hpp"
#include "waring/extract.hpp"

using namespace waring;

TEST_CASE("two rational points") {
  // x2, x3, x4 and x0*x1 - ... : the points (1,2,0,0,0) and (3,-1,0,0,0)
  RationalField q;
  std::vector<FormQ> gens = {variable(q, 2), variable(q, 3), variable(q, 4)};
  auto l1 = linear_form(q, {2, -1, 0, 0, 0}), l2 = linear_form(q, {1, 3, 0, 0, 0});
  gens.push_back(multiply(q, l1, l2));
  auto ex = extract_points(gens, 2, 1);
  REQUIRE(ex.points.size() == 2);
  bool first = false, second = false;
  for (const auto& p : ex.points) {
    CHECK(std::abs(p[2]) + std::abs(p[3]) + std::abs(p[4]) < 1e-12);
    if (std::abs(p[1] / p[0] - 2.0) < 1e-12) first = true;
    if (std::abs(p[1] / p[0] + 1.0 / 3.0) < 1e-12) second = true;
  }
  CHECK(first);
  CHECK(second);
}

TEST_CASE("second decomposition of a regenerated twelve-term instance") {
  auto w = make_nonidentifiable_12(1);
  auto v = certify(w.decomposition);
  REQUIRE(v.witness);
  auto nd = extract_second_decomposition(w.decomposition, *v.witness);
  MESSAGE("residual " << nd.generator_residual << ", weights " << nd.weight_residual << ", pairs "
                      << nd.conjugate_pairs << ", real " << nd.real_points);
  CHECK(nd.points.size() == 12);
  CHECK(nd.generator_residual < 1e-8);
  CHECK(nd.weight_residual < 1e-8);
  CHECK(nd.conjugation_closed);
  for (const auto& x : nd.weights) CHECK(std::abs(x) > 1e-12);
}
