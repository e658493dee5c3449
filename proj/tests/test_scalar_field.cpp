#include "doctest.h"
#include "waring/scalar_field.hpp"

#include <random>

using namespace waring;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(!inverse(Rational(0)).has_value());
  CHECK(!divide(Rational(3), Rational(0)).has_value());
  CHECK(*inverse(Rational(-3, 7)) == Rational(-7, 3));
  CHECK(*divide(Rational(3, 4), Rational(9, 8)) == Rational(2, 3));
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK_THROWS(parse_rational(""));
  Rational big = parse_rational("123456789012345678901234567890/7");
  CHECK(parse_rational(to_string(big)) == big);
}

TEST_CASE("primality") {
  CHECK(is_prime_u32(101));
  CHECK(is_prime_u32(kDefaultPrime));
  CHECK(!is_prime_u32(2147483645u));
  CHECK(!is_prime_u32(3215031751u));
  CHECK(!is_prime_u32(1));
  CHECK(is_prime_u32(2147483647u));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    auto p = random_prime(rng);
    CHECK(p > (1u << 30));
    CHECK(p < (1u << 31));
    CHECK(is_prime_u32(p));
  }
}

TEST_CASE("small prime residues") {
  Fp a = Fp::from_int(7, 101), b = Fp::from_int(29, 101);
  CHECK((a * b).residue() == 1);
  CHECK(!Fp(0, 101).inverse().has_value());
  CHECK(!a.divide(Fp(0, 101)).has_value());
  CHECK((-a + a).is_zero());
  CHECK(Fp::from_int(-1, 101).residue() == 100);
  CHECK_THROWS(a + Fp(1, 103));
}

TEST_CASE("prime field axioms on random data") {
  PrimeField f;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
  for (int i = 0; i < 2000; ++i) {
    auto a = d(rng), b = d(rng), c = d(rng);
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.sub(f.add(a, b), b) == a);
    CHECK(f.mul(a, b) == static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % f.modulus()));
    if (a != 0) CHECK(f.mul(a, *f.inv(a)) == 1);
  }
  CHECK(!f.inv(0).has_value());
  CHECK(!f.div(5, 0).has_value());
}

TEST_CASE("rational field axioms on random data") {
  RationalField f;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1000, 1000);
  auto draw = [&] {
    long den = d(rng);
    if (den == 0) den = 1;
    Rational q(d(rng), den);
    q.canonicalize();
    return q;
  };
  for (int i = 0; i < 500; ++i) {
    auto a = draw(), b = draw(), c = draw();
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    if (!f.is_zero(a)) CHECK(f.mul(a, *f.inv(a)) == 1);
    CHECK(a.get_den() > 0);
  }
}

TEST_CASE("prime field construction and rational reduction") {
  CHECK_THROWS(PrimeField(1000000007u));
  CHECK_THROWS(PrimeField(2147483645u));
  PrimeField f;
  CHECK(!f.from_rational(Rational(1, kDefaultPrime)).has_value());
  auto half = *f.from_rational(Rational(1, 2));
  CHECK(f.mul(half, 2) == 1);
  CHECK(f.from_integer(Integer(-1)) == f.modulus() - 1);
  CHECK(f.to_signed(f.from_int(-5)) == -5);
}

TEST_CASE("crt and rational reconstruction") {
  Rational q(-123456789, 987654);
  q.canonicalize();
  std::vector<std::uint32_t> primes = {2147483629u, 2147483587u, 2147483579u};
  std::vector<std::uint32_t> res;
  for (auto p : primes) res.push_back(*PrimeField(p).from_rational(q));
  Integer m = 1;
  for (auto p : primes) m *= p;
  Integer a = crt(res, primes);
  CHECK(a >= 0);
  CHECK(a < m);
  auto r = rational_reconstruct(a, m);
  REQUIRE(r.has_value());
  CHECK(*r == q);
}
