#pragma once

#include "waring/poly.hpp"

#include <vector>

namespace waring {

// Homogeneous Buchberger over F_p in grevlex, truncated at a maximal degree:
// the leading-term ideal is exact in every degree up to that bound.
class TruncatedGroebner {
 public:
  TruncatedGroebner(const PrimeField& f, const std::vector<FormP>& gens, int max_degree);

  int max_degree() const { return max_degree_; }
  std::size_t size() const { return basis_.size(); }

  // dim R_d / I_d
  std::size_t hilbert(int d) const;
  // dim I_d
  std::size_t ideal_dim(int d) const { return dim_graded(d) - hilbert(d); }

  // Normal form in R_d, dense over graded-lex monomials; zero iff g lies in the ideal.
  VecP normal_form(const FormP& g) const;
  bool contains(const FormP& g) const;

  // Graded-lex indices of the standard monomials of degree d, ascending.
  std::vector<std::size_t> standard_monomials(int d) const;

  // Column j = normal form of monomial j of degree d, restricted to the standard monomials.
  MatP normal_form_matrix(int d) const;

  std::size_t pairs_reduced() const { return pairs_reduced_; }

 private:
  struct Poly {
    int degree;
    Exponents lead;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;  // (graded-lex index, coefficient), grevlex-descending
  };
  struct Reducer {
    int g = -1;
    std::uint32_t multiplier = 0;  // graded-lex index of the cofactor monomial
  };

  void reduce_dense(int d, VecP& v) const;
  void add_element(VecP dense, int d);
  void update_pairs(std::size_t h);

  PrimeField f_;
  int max_degree_;
  std::vector<Poly> basis_;
  std::vector<std::vector<Reducer>> reducers_;  // per degree, per monomial
  struct Pair {
    std::size_t i, j;
    Exponents lcm;
    int degree;
  };
  std::vector<Pair> pairs_;
  std::size_t pairs_reduced_ = 0;
};

// Graded-lex indices of monomials(d) sorted grevlex-descending.
const std::vector<std::uint32_t>& grevlex_order(int d);

}  // namespace waring
