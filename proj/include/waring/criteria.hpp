#pragma once

#include "waring/decomposition.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace waring {

struct KruskalResult {
  std::size_t k = 0;
  std::vector<std::size_t> witness;  // a dependent (k+1)-subset, empty when k = min(l, dim)
  std::size_t subsets_checked = 0;
};

// Largest k such that every k-subset of v_d(A) is independent.
KruskalResult kruskal_rank(const PointSet& a, int d);

enum class CriterionVerdict { Identifiable, Inconclusive };
const char* to_string(CriterionVerdict v);

struct ReshapedKruskalResult {
  CriterionVerdict verdict = CriterionVerdict::Inconclusive;
  std::vector<int> best_partition;  // d1 >= d2 >= d3
  Rational best_bound;              // (k_d1 + k_d2 + k_d3 - 2) / 2
  std::map<int, std::size_t> kruskal;
};

// Throws if some point is redundant for the decomposition.
ReshapedKruskalResult reshaped_kruskal(const Decomposition& dec, int d);

// Rows: coefficients of x_j * L^(d-1) for each point and j (the span of the tangent spaces).
MatQ terracini_matrix(const PointSet& a, int d);
RankCertificate terracini_dim(const PointSet& a, int d, const FieldPolicy& policy = {});

struct Quartic2n1Result {
  CriterionVerdict verdict = CriterionVerdict::Inconclusive;
  std::size_t veronese_rank = 0;
  std::size_t k1 = 0;
  std::size_t terracini_rank = 0;
};

// Nine points: rank v4(A) = 9, k1 = 5, Terracini rank 45.
Quartic2n1Result quartic_2n1_criterion(const Decomposition& dec, const FieldPolicy& policy = {});

// Index of a point P_i with T in the span of v_d(A \ P_i), if any.
std::optional<std::size_t> redundant_point(const Decomposition& dec, const FieldPolicy& policy = {});

struct Flag {
  bool evaluated = false;
  bool ok = false;
  std::string detail;
};

enum class BatteryLevel { IV, IVPrime, V };

struct ConditionReport {
  Flag non_redundant;     // (i)
  Flag kruskal1;          // (ii)
  Flag kruskal2;          // (iii)
  Flag base_locus;        // (iv)
  Flag base_locus_prime;  // (iv')
  Flag curve;             // (v)
  std::vector<Rational> weights;
  std::vector<EvidenceItem> evidence;
  bool all_evaluated_ok() const;
};

// Memoizes base-locus reports of sub-configurations by their canonical points.
class LocusCache {
 public:
  BaseLocusReport get(const PointSet& a, const PrimeField& f);
  std::size_t computed() const { return computed_; }

 private:
  std::mutex mu_;
  std::map<std::string, BaseLocusReport> map_;
  std::size_t computed_ = 0;
};

struct SmoothnessReport {
  bool smooth = false;
  std::size_t h6 = 0;
  std::string method;
};

// Maximal minors of the k x 5 Jacobian matrix of k forms (k <= 4), column subsets in lex order.
std::vector<FormP> jacobian_maximal_minors(const PrimeField& f, const std::vector<FormP>& forms);

// Singular locus of V(quadrics): quadrics plus 3x3 minors of the Jacobian, Hilbert function at degree 6 mod p.
SmoothnessReport smoothness_certificate(const PrimeField& f, const std::vector<FormP>& quadrics);

ConditionReport condition_battery(const Decomposition& dec, BatteryLevel level, const FieldPolicy& policy = {},
                                  LocusCache* cache = nullptr);

// Finite base locus for every subset of A with size in [min_size, max_size].
Flag subset_closed_base_locus(const PointSet& a, std::size_t min_size, std::size_t max_size, const PrimeField& f,
                              LocusCache& cache, std::vector<EvidenceItem>& evidence);

std::string canonical_key(const PointSet& a);

}  // namespace waring
