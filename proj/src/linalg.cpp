#include "waring/linalg.hpp"

#include <random>

namespace waring {

namespace {

// Forward (or full Gauss-Jordan) elimination mod p on a dense copy.
struct ModElim {
  const PrimeField& f;
  std::size_t rows, cols;
  std::vector<std::uint32_t> a;
  std::vector<std::size_t> pivots;

  ModElim(const PrimeField& field, const MatP& m) : f(field), rows(m.rows()), cols(m.cols()), a(m.data()) {}

  std::uint32_t* row(std::size_t i) { return a.data() + i * cols; }

  void run(bool jordan) {
    std::uint32_t p = f.modulus();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && row(piv)[c] == 0) ++piv;
      if (piv == rows) continue;
      if (piv != r) std::swap_ranges(row(piv) + c, row(piv) + cols, row(r) + c);
      std::uint32_t* pr = row(r);
      std::uint32_t inv = *f.inv(pr[c]);
      for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
      std::size_t start = jordan ? 0 : r + 1;
      for (std::size_t i = start; i < rows; ++i) {
        if (i == r) continue;
        std::uint32_t* ri = row(i);
        std::uint32_t x = ri[c];
        if (x == 0) continue;
        std::uint64_t neg = p - x;
        for (std::size_t j = c; j < cols; ++j) {
          if (pr[j] == 0) continue;
          ri[j] = static_cast<std::uint32_t>(f.reduce(neg * pr[j] + ri[j]));
        }
      }
      pivots.push_back(c);
      ++r;
    }
  }
};

Integer lcm_den(const Rational* begin, const Rational* end) {
  Integer l = 1;
  for (auto it = begin; it != end; ++it) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), it->get_den_mpz_t());
  return l;
}

// Integer matrix with each row scaled by the lcm of its denominators.
std::vector<std::vector<Integer>> clear_denominators(const MatQ& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = lcm_den(m.row_ptr(i), m.row_ptr(i) + m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

// Bareiss forward elimination, leftmost pivot with column skipping.
// Returns pivot columns; rows [0, rank) hold the fraction-free echelon rows.
// sign tracks row swaps.
std::vector<std::size_t> bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, int* sign) {
  std::vector<std::size_t> pivots;
  std::size_t rows = a.size(), r = 0;
  Integer prev = 1, t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      if (sign) *sign = -*sign;
    }
    const Integer& pv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      Integer& lead = a[i][c];
      if (lead == 0) {
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          a[i][j] *= pv;
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), pv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Echelon<std::uint32_t> rref(const PrimeField& f, const MatP& m) {
  ModElim e(f, m);
  e.run(true);
  Echelon<std::uint32_t> out;
  out.cols = m.cols();
  out.pivots = e.pivots;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.rows.emplace_back(e.row(i), e.row(i) + m.cols());
  return out;
}

std::size_t rank(const PrimeField& f, const MatP& m) {
  ModElim e(f, m);
  e.run(false);
  return e.pivots.size();
}

std::optional<std::uint32_t> determinant(const PrimeField& f, const MatP& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  std::vector<std::uint32_t> a = m.data();
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0u;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = f.neg(det);
    }
    std::uint32_t pv = a[c * n + c];
    det = f.mul(det, pv);
    std::uint32_t inv = *f.inv(pv);
    for (std::size_t i = c + 1; i < n; ++i) {
      std::uint32_t x = f.mul(a[i * n + c], inv);
      if (x == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(x, a[c * n + j]));
    }
  }
  return det;
}

Echelon<Rational> rref(const RationalField&, const MatQ& m) {
  auto a = clear_denominators(m);
  auto pivots = bareiss(a, m.cols(), nullptr);
  Echelon<Rational> out;
  out.cols = m.cols();
  out.pivots = pivots;
  std::size_t r = pivots.size();
  out.rows.assign(r, VecQ(m.cols()));
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& pv = a[i][pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (a[i][j] == 0) continue;
      out.rows[i][j] = Rational(a[i][j], pv);
      out.rows[i][j].canonicalize();
    }
  }
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Rational x = out.rows[k][pivots[i]];
      if (sgn(x) == 0) continue;
      for (std::size_t j = pivots[i]; j < m.cols(); ++j)
        if (sgn(out.rows[i][j]) != 0) out.rows[k][j] -= x * out.rows[i][j];
    }
  }
  return out;
}

std::size_t rank(const RationalField&, const MatQ& m) {
  auto a = clear_denominators(m);
  return bareiss(a, m.cols(), nullptr).size();
}

Rational determinant(const RationalField&, const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale *= lcm_den(m.row_ptr(i), m.row_ptr(i) + n);
  auto a = clear_denominators(m);
  int sign = 1;
  auto piv = bareiss(a, n, &sign);
  if (piv.size() < n) return 0;
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

std::vector<Integer> primitive_integer_row(const VecQ& row) {
  Integer l = lcm_den(row.data(), row.data() + row.size());
  std::vector<Integer> out(row.size());
  Integer g = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (l / row[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::optional<MatP> reduce_mod(const PrimeField& f, const MatQ& m) {
  MatP out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto r = f.from_rational(m(i, j));
      if (!r) return std::nullopt;
      out(i, j) = *r;
    }
  return out;
}

std::optional<VecP> reduce_mod(const PrimeField& f, const VecQ& v) {
  VecP out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto r = f.from_rational(v[i]);
    if (!r) return std::nullopt;
    out[i] = *r;
  }
  return out;
}

namespace {

template <class F, class Det>
MinorScan scan_minors(const F&, const Matrix<Elem<F>>& m, Det&& is_zero_minor) {
  MinorScan s;
  bool tall = m.rows() >= m.cols();
  std::size_t n = tall ? m.rows() : m.cols();
  std::size_t k = tall ? m.cols() : m.rows();
  s.total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
    auto sub = tall ? m.select_rows(idx) : m.select_cols(idx);
    ++s.checked;
    if (is_zero_minor(sub)) {
      s.all_nonzero = false;
      s.witness = idx;
      return false;
    }
    return true;
  });
  return s;
}

}  // namespace

MinorScan all_maximal_minors_nonzero(const RationalField& f, const MatQ& m) {
  return scan_minors(f, m, [](const MatQ& sub) {
    auto a = clear_denominators(sub);
    return bareiss(a, sub.cols(), nullptr).size() < sub.cols();
  });
}

MinorScan all_maximal_minors_nonzero(const PrimeField& f, const MatP& m) {
  return scan_minors(f, m, [&](const MatP& sub) { return *determinant(f, sub) == 0; });
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RankCertificate certified_rank(const MatQ& m, std::size_t upper_bound, const FieldPolicy& policy) {
  RankCertificate c;
  c.bound = upper_bound;
  c.hash = matrix_hash(m);
  if (policy.modular) {
    std::mt19937_64 rng(policy.seed);
    std::uint32_t p = policy.prime;
    for (int attempt = 0; attempt <= policy.retries; ++attempt) {
      if (attempt > 0) p = random_prime(rng);
      PrimeField f(p);
      auto mp = reduce_mod(f, m);
      if (!mp) continue;
      std::size_t r = rank(f, *mp);
      if (r >= upper_bound) {
        c.rank = r;
        c.method = "modp:" + std::to_string(p);
        return c;
      }
    }
  }
  c.rank = rank(RationalField{}, m);
  c.method = "rational";
  return c;
}

std::uint64_t matrix_hash(const MatQ& m) {
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv1a(h, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ";");
  for (const auto& x : m.data()) h = fnv1a(h, to_string(x) + ",");
  return h;
}

std::uint64_t matrix_hash(const MatP& m) {
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv1a(h, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ";");
  for (auto x : m.data()) h = fnv1a(h, std::to_string(x) + ",");
  return h;
}

}  // namespace waring
