#pragma once

#include "waring/linalg.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace waring {

constexpr int kVars = 5;
using Exponents = std::array<int, kVars>;

std::size_t dim_graded(int d);

// Monomials of degree d in graded lex order, x0 > x1 > ... > x4.
const std::vector<Exponents>& monomials(int d);
std::size_t monomial_index(const Exponents& e);
int degree_of(const Exponents& e);

// table[i * dim_graded(b) + j] = index of monomials(a)[i] * monomials(b)[j] in degree a + b.
const std::vector<std::uint32_t>& product_table(int a, int b);

Integer factorial_weight(const Exponents& e);         // e0! ... e4!
Integer multinomial(const Exponents& e);              // d! / (e0! ... e4!)
std::string monomial_name(const Exponents& e);        // "x0^2*x3"

template <class E>
struct Form {
  int degree = 0;
  std::vector<E> coeffs;
};

using FormQ = Form<Rational>;
using FormP = Form<std::uint32_t>;

template <class F>
Form<Elem<F>> zero_form(const F& f, int d) {
  return {d, std::vector<Elem<F>>(dim_graded(d), f.zero())};
}

template <class F>
Form<Elem<F>> monomial_form(const F& f, const Exponents& e) {
  auto g = zero_form(f, degree_of(e));
  g.coeffs[monomial_index(e)] = f.one();
  return g;
}

template <class F>
Form<Elem<F>> variable(const F& f, int i) {
  Exponents e{};
  e[i] = 1;
  return monomial_form(f, e);
}

template <class F>
Form<Elem<F>> linear_form(const F& f, const std::vector<Elem<F>>& u) {
  auto g = zero_form(f, 1);
  for (int i = 0; i < kVars; ++i) g.coeffs[monomial_index(Exponents{i == 0, i == 1, i == 2, i == 3, i == 4})] = u[i];
  return g;
}

template <class F>
bool is_zero(const F& f, const Form<Elem<F>>& g) {
  for (const auto& c : g.coeffs)
    if (!f.is_zero(c)) return false;
  return true;
}

template <class F>
Form<Elem<F>> add(const F& f, const Form<Elem<F>>& a, const Form<Elem<F>>& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  auto c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = f.add(c.coeffs[i], b.coeffs[i]);
  return c;
}

template <class F>
Form<Elem<F>> scale(const F& f, const Elem<F>& s, Form<Elem<F>> a) {
  for (auto& c : a.coeffs) c = f.mul(s, c);
  return a;
}

template <class F>
Form<Elem<F>> multiply(const F& f, const Form<Elem<F>>& a, const Form<Elem<F>>& b) {
  const auto& tab = product_table(a.degree, b.degree);
  auto c = zero_form(f, a.degree + b.degree);
  std::size_t nb = b.coeffs.size();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (f.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (f.is_zero(b.coeffs[j])) continue;
      auto& slot = c.coeffs[tab[i * nb + j]];
      slot = f.add(slot, f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return c;
}

template <class F>
Elem<F> monomial_value(const F& f, const Exponents& e, const std::vector<Elem<F>>& u) {
  Elem<F> v = f.one();
  for (int i = 0; i < kVars; ++i)
    for (int k = 0; k < e[i]; ++k) v = f.mul(v, u[i]);
  return v;
}

template <class F>
Elem<F> evaluate(const F& f, const Form<Elem<F>>& g, const std::vector<Elem<F>>& u) {
  const auto& mons = monomials(g.degree);
  Elem<F> s = f.zero();
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!f.is_zero(g.coeffs[i])) s = f.add(s, f.mul(g.coeffs[i], monomial_value(f, mons[i], u)));
  return s;
}

// Rows u^alpha over monomials of degree d (no multinomial weights).
template <class F>
std::vector<Elem<F>> monomial_values(const F& f, const std::vector<Elem<F>>& u, int d) {
  const auto& mons = monomials(d);
  std::vector<Elem<F>> out(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) out[i] = monomial_value(f, mons[i], u);
  return out;
}

// Coefficients of (u0 x0 + ... + u4 x4)^d.
template <class F>
std::vector<Elem<F>> veronese(const F& f, const std::vector<Elem<F>>& u, int d) {
  if (u.size() != kVars) throw std::invalid_argument("point must have 5 coordinates");
  bool nonzero = false;
  for (const auto& x : u) nonzero = nonzero || !f.is_zero(x);
  if (!nonzero) throw std::invalid_argument("zero point");
  const auto& mons = monomials(d);
  std::vector<Elem<F>> out(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i)
    out[i] = f.mul(f.from_integer(multinomial(mons[i])), monomial_value(f, mons[i], u));
  return out;
}

template <class F>
Form<Elem<F>> derivative(const F& f, const Form<Elem<F>>& g, int var) {
  if (g.degree == 0) return zero_form(f, 0);
  auto out = zero_form(f, g.degree - 1);
  const auto& mons = monomials(g.degree);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f.is_zero(g.coeffs[i]) || mons[i][var] == 0) continue;
    Exponents e = mons[i];
    --e[var];
    auto& slot = out.coeffs[monomial_index(e)];
    slot = f.add(slot, f.mul(f.from_int(mons[i][var]), g.coeffs[i]));
  }
  return out;
}

// Sum of g_a t_a a!.
template <class F>
Elem<F> apolar_pair(const F& f, const Form<Elem<F>>& g, const Form<Elem<F>>& t) {
  if (g.degree != t.degree) throw std::invalid_argument("apolar pairing needs equal degrees");
  const auto& mons = monomials(g.degree);
  Elem<F> s = f.zero();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f.is_zero(g.coeffs[i]) || f.is_zero(t.coeffs[i])) continue;
    s = f.add(s, f.mul(f.mul(g.coeffs[i], t.coeffs[i]), f.from_integer(factorial_weight(mons[i]))));
  }
  return s;
}

// Linear functional g -> <g, t> as a row vector over monomials of degree t.degree.
template <class F>
std::vector<Elem<F>> apolar_functional(const F& f, const Form<Elem<F>>& t) {
  const auto& mons = monomials(t.degree);
  std::vector<Elem<F>> out(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) out[i] = f.mul(t.coeffs[i], f.from_integer(factorial_weight(mons[i])));
  return out;
}

// Entry (alpha, beta) = t_{alpha+beta} (alpha+beta)!; rows index R_a, columns R_b.
template <class F>
Matrix<Elem<F>> catalecticant(const F& f, const Form<Elem<F>>& t, int a, int b) {
  if (a + b != t.degree || a < 1 || b < 1) throw std::invalid_argument("catalecticant needs a + b = deg t, a, b >= 1");
  auto w = apolar_functional(f, t);
  const auto& tab = product_table(a, b);
  std::size_t na = dim_graded(a), nb = dim_graded(b);
  Matrix<Elem<F>> m(na, nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) m(i, j) = w[tab[i * nb + j]];
  return m;
}

// Matrix of g -> f*g from R_d to R_{d + deg f}; column j is f times monomial j.
template <class F>
Matrix<Elem<F>> multiplication_matrix(const F& f, const Form<Elem<F>>& g, int d) {
  const auto& tab = product_table(g.degree, d);
  std::size_t nd = dim_graded(d);
  Matrix<Elem<F>> m(dim_graded(g.degree + d), nd, f.zero());
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    if (f.is_zero(g.coeffs[i])) continue;
    for (std::size_t j = 0; j < nd; ++j) m(tab[i * nd + j], j) = g.coeffs[i];
  }
  return m;
}

// Graded free module R(-s_1) + ... + R(-s_k).
struct FreeModule {
  std::vector<int> shifts;
  std::size_t rank() const { return shifts.size(); }
  std::size_t dim(int d) const {
    std::size_t n = 0;
    for (int s : shifts)
      if (d >= s) n += dim_graded(d - s);
    return n;
  }
  std::size_t offset(std::size_t gen, int d) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < gen; ++i)
      if (d >= shifts[i]) n += dim_graded(d - shifts[i]);
    return n;
  }
};

// Homogeneous map between free modules; entry (i, j) has degree source[j] - target[i].
template <class E>
struct ModuleMap {
  FreeModule source, target;
  std::vector<std::vector<Form<E>>> entries;  // [target][source]
};

// The map in degree d as a matrix over the field.
template <class F>
Matrix<Elem<F>> graded_piece(const F& f, const ModuleMap<Elem<F>>& m, int d) {
  Matrix<Elem<F>> out(m.target.dim(d), m.source.dim(d), f.zero());
  for (std::size_t j = 0; j < m.source.rank(); ++j) {
    int dj = d - m.source.shifts[j];
    if (dj < 0) continue;
    std::size_t col0 = m.source.offset(j, d);
    std::size_t nj = dim_graded(dj);
    for (std::size_t i = 0; i < m.target.rank(); ++i) {
      const auto& g = m.entries[i][j];
      if (d - m.target.shifts[i] < 0) continue;
      if (g.degree + dj != d - m.target.shifts[i]) throw std::invalid_argument("map entry has the wrong degree");
      std::size_t row0 = m.target.offset(i, d);
      const auto& tab = product_table(g.degree, dj);
      for (std::size_t a = 0; a < g.coeffs.size(); ++a) {
        if (f.is_zero(g.coeffs[a])) continue;
        for (std::size_t b = 0; b < nj; ++b) {
          auto& slot = out(row0 + tab[a * nj + b], col0 + b);
          slot = f.add(slot, g.coeffs[a]);
        }
      }
    }
  }
  return out;
}

// A vector of the degree-d piece of a free module, split into its component forms.
template <class F>
std::vector<Form<Elem<F>>> split_components(const F& f, const FreeModule& m, int d, const std::vector<Elem<F>>& v) {
  std::vector<Form<Elem<F>>> out;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    int di = d - m.shifts[i];
    if (di < 0) {
      out.push_back(zero_form(f, 0));
      continue;
    }
    std::size_t o = m.offset(i, d);
    out.push_back({di, std::vector<Elem<F>>(v.begin() + o, v.begin() + o + dim_graded(di))});
  }
  return out;
}

class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> coords);
  const std::vector<Rational>& raw() const { return raw_; }
  const std::vector<Rational>& canonical() const { return canon_; }
  bool operator==(const ProjectivePoint& o) const { return canon_ == o.canon_; }
  bool operator<(const ProjectivePoint& o) const;

 private:
  std::vector<Rational> raw_, canon_;
};

template <class F>
std::vector<Elem<F>> coords(const F& f, const ProjectivePoint& p) {
  return to_field(f, p.raw());
}

template <class F>
Form<Elem<F>> to_field(const F& f, const FormQ& g) {
  return {g.degree, to_field(f, g.coeffs)};
}

std::string form_to_string(const FormQ& g);

}  // namespace waring
