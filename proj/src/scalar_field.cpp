#include "waring/scalar_field.hpp"

#include <stdexcept>

namespace waring {

std::optional<Rational> inverse(const Rational& a) {
  if (sgn(a) == 0) return std::nullopt;
  Rational r(a.get_den(), a.get_num());
  r.canonicalize();
  return r;
}

std::optional<Rational> divide(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) return std::nullopt;
  return Rational(a / b);
}

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + text + "'");
  Integer n(strip_plus(num)), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

static std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, b = a % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 61u})
    if (n % q == 0) return n == q;
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint32_t a : {2u, 7u, 61u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
  for (;;) {
    std::uint32_t c = dist(rng) | 1u;
    if (is_prime_u32(c)) return c;
  }
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= (1u << 30) || p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("modulus must be a prime in (2^30, 2^31)");
  mu_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::optional<PrimeField::Element> PrimeField::inv(Element a) const {
  if (a == 0) return std::nullopt;
  return static_cast<Element>(powmod(a, p_ - 2, p_));
}

std::optional<PrimeField::Element> PrimeField::div(Element a, Element b) const {
  auto ib = inv(b);
  if (!ib) return std::nullopt;
  return mul(a, *ib);
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const Integer& v) const {
  if (v.fits_slong_p()) return from_int(v.get_si());
  return static_cast<Element>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

std::optional<PrimeField::Element> PrimeField::from_rational(const Rational& q) const {
  Element d = from_integer(q.get_den());
  if (d == 0) return std::nullopt;
  return mul(from_integer(q.get_num()), *inv(d));
}

Fp::Fp(std::uint64_t residue, std::uint32_t modulus) : v_(static_cast<std::uint32_t>(residue % modulus)), p_(modulus) {
  if (!is_prime_u32(modulus)) throw std::invalid_argument("modulus is not prime");
}

Fp Fp::from_int(long long v, std::uint32_t modulus) {
  long long r = v % static_cast<long long>(modulus);
  if (r < 0) r += modulus;
  return Fp(static_cast<std::uint64_t>(r), modulus);
}

void Fp::check(const Fp& o) const {
  if (o.p_ != p_) throw std::invalid_argument("mixed moduli");
}

Fp Fp::operator+(const Fp& o) const {
  check(o);
  return Fp(static_cast<std::uint64_t>(v_) + o.v_, p_);
}
Fp Fp::operator-(const Fp& o) const {
  check(o);
  return Fp(static_cast<std::uint64_t>(v_) + p_ - o.v_, p_);
}
Fp Fp::operator*(const Fp& o) const {
  check(o);
  return Fp(static_cast<std::uint64_t>(v_) * o.v_, p_);
}
Fp Fp::operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

std::optional<Fp> Fp::inverse() const {
  if (v_ == 0) return std::nullopt;
  return Fp(powmod(v_, p_ - 2, p_), p_);
}

std::optional<Fp> Fp::divide(const Fp& o) const {
  check(o);
  auto i = o.inverse();
  if (!i) return std::nullopt;
  return *this * *i;
}

Integer crt(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes) {
  Integer x = 0, m = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Integer p = primes[i];
    // x + m*k = r (mod p)
    Integer diff = Integer(residues[i]) - x;
    Integer minv;
    mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    Integer k = diff * minv;
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), p.get_mpz_t());
    x += m * k;
    m *= p;
  }
  return x;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace waring
