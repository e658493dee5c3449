#pragma once

#include "waring/decomposition.hpp"
#include "waring/liaison.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

constexpr long kCoordinateBox = 15000;

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer points in [-15000, 15000]^5, redrawn until k_1 = min(r, 5) and k_2 = min(r, 15).
PointSet random_points(std::size_t r, std::uint64_t seed, int budget = 20);

// A generic expression with small nonzero integer weights.
Decomposition random_decomposition(std::size_t r, std::uint64_t seed);

// T = sum w_a v_4(a) with a second decomposition B known through its ideal (mod prime).
struct WitnessInstance {
  Decomposition decomposition;
  std::uint32_t prime = 0;
  std::vector<FormQ> linking;          // generators of the linking complete intersection
  std::vector<IdealPieceP> b_pieces;   // (I_B)_d, d = 0..5
  std::vector<FormP> b_generators;     // minimal generators of I_B up to degree 4
  std::vector<long> b_hvector;
  std::vector<std::size_t> z_hilbert;  // h_{A u B}(0..5)
  std::size_t u_codimension = 0;       // codim of (I_A)_4 + (I_B)_4
  std::uint64_t seed = 0;
  int attempts = 0;
  // r = 12: F = sum lambda_k F_k over the cubic complement
  std::vector<Integer> lambda;
  // r = 13: the ten points W on a hyperplane section
  std::vector<std::size_t> aw_hilbert;  // h_{A u W}(0..4)
  std::vector<std::size_t> w_hilbert;   // h_W(0..4)
  FormQ hyperplane;                     // Lambda, containing W
};

WitnessInstance make_nonidentifiable_12(std::uint64_t seed, int budget = 10);
WitnessInstance make_nonidentifiable_13(std::uint64_t seed, int budget = 10);

struct NondisjointInstance {
  Decomposition decomposition;  // A' followed by the extra point
  WitnessInstance base;         // the r = 12 pair (A', B')
  std::size_t planted = 12;     // index of the extra point
};

NondisjointInstance make_nondisjoint_13(std::uint64_t seed, int budget = 10);

// (I_A)_d intersected with (I_B)_d: Hilbert function of the union for d = 0..pieces.size()-1.
std::vector<std::size_t> union_hilbert(const PrimeField& f, const PointSet& a, const std::vector<IdealPieceP>& b_pieces);

}  // namespace waring
