#pragma once

#include "waring/pointsets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace waring {

// T = sum weights[i] * L_i^degree, with L_i the linear form of points[i].
struct Decomposition {
  PointSet points;
  std::vector<Rational> weights;
  int degree = 4;

  Decomposition() = default;
  Decomposition(PointSet pts, std::vector<Rational> w, int deg = 4);  // rejects zero weights and length mismatch
  std::size_t size() const { return points.size(); }
  FormQ form() const;
};

FormQ power_sum(const PointSet& a, const std::vector<Rational>& weights, int degree = 4);

struct WeightRecovery {
  bool in_span = false;
  std::vector<Rational> weights;  // exact when in_span
  std::string certificate;        // otherwise: why T is outside the span
};

// Unique weights with T = sum w_i v_deg(P_i); throws if v_deg(A) is dependent.
WeightRecovery recover_weights(const FormQ& t, const PointSet& a);

struct EvidenceItem {
  std::string key;
  std::string value;
  std::string method;
  std::uint64_t hash = 0;
};

}  // namespace waring
