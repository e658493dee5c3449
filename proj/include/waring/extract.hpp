#pragma once

#include "waring/certifier.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace waring {

using Complex = std::complex<double>;
using CPoint = std::array<Complex, kVars>;

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExtractOptions {
  double residual = 1e-8;     // |g(z)| <= residual * |g| * |z|^deg
  double cluster_gap = 1e-6;  // relative eigenvalue separation
  double pairing = 1e-6;      // conjugate matching
  int retries = 5;
  std::uint64_t seed = 1;
};

struct PointExtraction {
  std::vector<CPoint> points;   // scaled so the largest coordinate is 1
  double max_residual = 0;
  double null_gap = 0;          // sigma_{N-r-1} / sigma_{N-r} of the degree d+1 piece
  int draws = 0;
};

// Points of a reduced zero-dimensional scheme of length r from generators of its ideal.
// Requires h(d) = h(d+1) = r; uses the multiplication maps on the degree-d quotient.
PointExtraction extract_points(const std::vector<FormQ>& generators, std::size_t r, int d, const ExtractOptions& opts = {});

// |g(z)| / (|g| |z|^deg), coefficients taken in the monomial basis.
double relative_residual(const FormQ& g, const CPoint& z);

struct NumericDecomposition {
  std::vector<CPoint> points;
  std::vector<Complex> weights;
  double generator_residual = 0;
  double weight_residual = 0;   // |sum w_b v4(b) - T| / |T|
  std::size_t real_points = 0;
  std::size_t conjugate_pairs = 0;
  bool conjugation_closed = false;
};

// B from the linking complete intersection of the witness: Z minus the points of A, plus the shared point.
NumericDecomposition extract_second_decomposition(const Decomposition& dec, const Witness& w,
                                                  const ExtractOptions& opts = {});

}  // namespace waring
