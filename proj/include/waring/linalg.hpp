#pragma once

#include "waring/scalar_field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace waring {

template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill = E()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<E>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  E& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  E* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
  const E* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }
  std::vector<E> row(std::size_t i) const { return {row_ptr(i), row_ptr(i) + cols_}; }
  const std::vector<E>& data() const { return a_; }

  void append_row(const std::vector<E>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
  }

  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<E> a_;
};

using MatQ = Matrix<Rational>;
using MatP = Matrix<std::uint32_t>;
using VecQ = std::vector<Rational>;
using VecP = std::vector<std::uint32_t>;

// Reduced row echelon form: rows[i] has a 1 at pivots[i] and zeros in every other pivot column.
template <class E>
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::vector<E>> rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon<std::uint32_t> rref(const PrimeField& f, const MatP& m);
Echelon<Rational> rref(const RationalField& f, const MatQ& m);

std::size_t rank(const PrimeField& f, const MatP& m);
std::size_t rank(const RationalField& f, const MatQ& m);

std::optional<std::uint32_t> determinant(const PrimeField& f, const MatP& m);
Rational determinant(const RationalField& f, const MatQ& m);

// Rows scaled to primitive integer vectors (same span).
std::vector<Integer> primitive_integer_row(const VecQ& row);

std::optional<MatP> reduce_mod(const PrimeField& f, const MatQ& m);
std::optional<VecP> reduce_mod(const PrimeField& f, const VecQ& v);

template <class E>
struct Subspace {
  std::size_t ambient = 0;
  std::vector<std::vector<E>> basis;
  std::vector<std::size_t> pivots;
  std::size_t dim() const { return basis.size(); }
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

using SubQ = Subspace<Rational>;
using SubP = Subspace<std::uint32_t>;

template <class F>
using Elem = typename F::Element;

template <class F>
Subspace<Elem<F>> span(const F& f, std::size_t ambient, const std::vector<std::vector<Elem<F>>>& vectors) {
  Matrix<Elem<F>> m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw std::invalid_argument("vector length differs from ambient dimension");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  auto e = rref(f, m);
  return {ambient, std::move(e.rows), std::move(e.pivots)};
}

template <class F>
Subspace<Elem<F>> row_space(const F& f, const Matrix<Elem<F>>& m) {
  auto e = rref(f, m);
  return {m.cols(), std::move(e.rows), std::move(e.pivots)};
}

// Canonical basis of the right kernel: one vector per free column, 1 there, 0 on other free columns.
template <class F>
Subspace<Elem<F>> kernel(const F& f, const Matrix<Elem<F>>& m) {
  auto e = rref(f, m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem<F>>> vecs;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Elem<F>> v(n, f.zero());
    v[c] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.rows[i][c]);
    vecs.push_back(std::move(v));
  }
  return span(f, n, vecs);
}

// Remainder of v after clearing the pivot coordinates of s.
template <class F>
std::vector<Elem<F>> reduce(const F& f, const Subspace<Elem<F>>& s, std::vector<Elem<F>> v) {
  if (v.size() != s.ambient) throw std::invalid_argument("ambient mismatch");
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    auto c = v[s.pivots[i]];
    if (f.is_zero(c)) continue;
    const auto& b = s.basis[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!f.is_zero(b[j])) v[j] = f.sub(v[j], f.mul(c, b[j]));
  }
  return v;
}

template <class F>
bool contains(const F& f, const Subspace<Elem<F>>& s, const std::vector<Elem<F>>& v) {
  auto r = reduce(f, s, v);
  for (const auto& x : r)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
bool contains(const F& f, const Subspace<Elem<F>>& big, const Subspace<Elem<F>>& small) {
  if (big.ambient != small.ambient) throw std::invalid_argument("ambient mismatch");
  for (const auto& v : small.basis)
    if (!contains(f, big, v)) return false;
  return true;
}

template <class F>
Subspace<Elem<F>> subspace_sum(const F& f, const Subspace<Elem<F>>& u, const Subspace<Elem<F>>& v) {
  if (u.ambient != v.ambient) throw std::invalid_argument("ambient mismatch");
  auto all = u.basis;
  all.insert(all.end(), v.basis.begin(), v.basis.end());
  return span(f, u.ambient, all);
}

template <class F>
Subspace<Elem<F>> subspace_intersect(const F& f, const Subspace<Elem<F>>& u, const Subspace<Elem<F>>& v) {
  if (u.ambient != v.ambient) throw std::invalid_argument("ambient mismatch");
  std::size_t n = u.ambient, a = u.dim(), b = v.dim();
  if (a == 0 || b == 0) return {n, {}, {}};
  Matrix<Elem<F>> m(n, a + b);
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = u.basis[j][i];
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, a + j) = f.neg(v.basis[j][i]);
  auto k = kernel(f, m);
  std::vector<std::vector<Elem<F>>> vecs;
  for (const auto& c : k.basis) {
    std::vector<Elem<F>> w(n, f.zero());
    for (std::size_t j = 0; j < a; ++j)
      if (!f.is_zero(c[j]))
        for (std::size_t i = 0; i < n; ++i) w[i] = f.add(w[i], f.mul(c[j], u.basis[j][i]));
    vecs.push_back(std::move(w));
  }
  return span(f, n, vecs);
}

// Solutions of A X = B column by column; free variables set to 0.
template <class E>
struct SolveResult {
  Matrix<E> x;
  std::vector<bool> consistent;
  bool all_consistent() const {
    for (bool c : consistent)
      if (!c) return false;
    return true;
  }
};

template <class F>
SolveResult<Elem<F>> solve_many(const F& f, const Matrix<Elem<F>>& a, const Matrix<Elem<F>>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch");
  std::size_t n = a.cols(), k = b.cols();
  Matrix<Elem<F>> aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto e = rref(f, aug);
  SolveResult<Elem<F>> out{Matrix<Elem<F>>(n, k, f.zero()), std::vector<bool>(k, true)};
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::size_t p = e.pivots[i];
    if (p >= n) {
      out.consistent[p - n] = false;
      continue;
    }
    for (std::size_t j = 0; j < k; ++j) out.x(p, j) = e.rows[i][n + j];
  }
  for (std::size_t j = 0; j < k; ++j)
    if (!out.consistent[j])
      for (std::size_t i = 0; i < n; ++i) out.x(i, j) = f.zero();
  return out;
}

template <class F>
std::optional<std::vector<Elem<F>>> solve(const F& f, const Matrix<Elem<F>>& a, const std::vector<Elem<F>>& b) {
  Matrix<Elem<F>> bm(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
  auto r = solve_many(f, a, bm);
  if (!r.consistent[0]) return std::nullopt;
  std::vector<Elem<F>> x(a.cols());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = r.x(i, 0);
  return x;
}

template <class F>
Matrix<Elem<F>> multiply(const F& f, const Matrix<Elem<F>>& a, const Matrix<Elem<F>>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  Matrix<Elem<F>> c(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto& x = a(i, l);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
    }
  return c;
}

template <class F>
std::vector<Elem<F>> apply(const F& f, const Matrix<Elem<F>>& a, const std::vector<Elem<F>>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("shape mismatch");
  std::vector<Elem<F>> out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(v[j])) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  return out;
}

// Maximal minors along the longer dimension; stops at the first zero.
struct MinorScan {
  bool all_nonzero = true;
  std::size_t checked = 0;
  std::size_t total = 0;
  std::vector<std::size_t> witness;  // row (or column) indices of a vanishing minor
};

MinorScan all_maximal_minors_nonzero(const RationalField& f, const MatQ& m);
MinorScan all_maximal_minors_nonzero(const PrimeField& f, const MatP& m);

// Calls visit(subset) on every k-subset of {0..n-1} in lex order until it returns false.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t binomial(unsigned n, unsigned k);

// Rank policy: a modular rank never exceeds the rational one, so reaching a known
// upper bound mod p settles the rank; otherwise retry primes, then go exact.
struct FieldPolicy {
  bool modular = true;
  std::uint32_t prime = kDefaultPrime;
  int retries = 3;
  std::uint64_t seed = 0x5eed;
};

struct RankCertificate {
  std::size_t rank = 0;
  std::size_t bound = 0;
  std::string method;  // "modp:<p>" or "rational"
  std::uint64_t hash = 0;
};

RankCertificate certified_rank(const MatQ& m, std::size_t upper_bound, const FieldPolicy& policy);
inline RankCertificate certified_rank(const MatQ& m, const FieldPolicy& policy) {
  return certified_rank(m, std::min(m.rows(), m.cols()), policy);
}

// FNV-1a over the canonical text of the entries.
std::uint64_t matrix_hash(const MatQ& m);
std::uint64_t matrix_hash(const MatP& m);

}  // namespace waring
