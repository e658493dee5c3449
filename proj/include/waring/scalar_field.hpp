#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

std::optional<Rational> inverse(const Rational& a);
std::optional<Rational> divide(const Rational& a, const Rational& b);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

bool is_prime_u32(std::uint32_t n);

constexpr std::uint32_t kDefaultPrime = 2147483629u;

// Uniform prime in (2^30, 2^31).
std::uint32_t random_prime(std::mt19937_64& rng);

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(reduce(static_cast<std::uint64_t>(a) * b));
  }
  std::optional<Element> inv(Element a) const;
  std::optional<Element> div(Element a, Element b) const;

  // x < 2^63
  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

  Element from_int(long long v) const;
  Element from_integer(const Integer& v) const;
  std::optional<Element> from_rational(const Rational& q) const;
  long long to_signed(Element a) const { return a > p_ / 2 ? static_cast<long long>(a) - p_ : a; }

 private:
  std::uint32_t p_;
  std::uint64_t mu_;
};

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  std::optional<Element> inv(const Element& a) const { return inverse(a); }
  std::optional<Element> div(const Element& a, const Element& b) const { return divide(a, b); }
  Element from_int(long long v) const { return Rational(static_cast<long>(v)); }
  Element from_integer(const Integer& v) const { return Rational(v); }
  std::optional<Element> from_rational(const Rational& q) const { return q; }
};

// Residue class with its modulus attached; the value type exposed to callers.
class Fp {
 public:
  Fp(std::uint64_t residue, std::uint32_t modulus);
  static Fp from_int(long long v, std::uint32_t modulus);

  std::uint32_t residue() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const;
  std::optional<Fp> inverse() const;
  std::optional<Fp> divide(const Fp& o) const;
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

 private:
  void check(const Fp& o) const;
  std::uint32_t v_;
  std::uint32_t p_;
};

// Raised when a rational has a denominator divisible by the working prime.
struct BadReduction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint32_t to_field(const PrimeField& f, const Rational& q) {
  auto r = f.from_rational(q);
  if (!r) throw BadReduction("denominator vanishes mod " + std::to_string(f.modulus()));
  return *r;
}
inline Rational to_field(const RationalField&, const Rational& q) { return q; }

template <class F>
std::vector<typename F::Element> to_field(const F& f, const std::vector<Rational>& v) {
  std::vector<typename F::Element> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_field(f, q));
  return out;
}

// Chinese remaindering of residues r_i mod p_i into [0, prod p_i).
Integer crt(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes);

// Wang's rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

}  // namespace waring
