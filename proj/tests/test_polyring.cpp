#include <doctest.h>

#include "schmidt/arith.hpp"
#include "schmidt/construct.hpp"
#include "schmidt/polyring.hpp"

using namespace schmidt;

namespace {

  PolyModP poly(unsigned p, std::vector<Coeff> c) {
    return PolyModP(p, std::move(c));
  }

}  // namespace

TEST_CASE("arith helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(ipow(3, 4) == 81);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 3) == 2);
  CHECK(multiplicative_order(3, 2) == 1);
  CHECK(multiplicative_order(10, 7) == 6);
  CHECK_THROWS_AS(multiplicative_order(7, 7), std::invalid_argument);
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  auto pp = as_prime_power(49);
  REQUIRE(pp);
  CHECK(pp->prime == 7);
  CHECK(pp->exponent == 2);
  CHECK_FALSE(as_prime_power(12));
  CHECK_FALSE(as_prime_power(1));
}

TEST_CASE("polynomials are trimmed and reduced") {
  auto f = poly(3, {4, 0, 3, 0});
  CHECK(f.coeffs() == std::vector<Coeff>{1});
  CHECK(f.degree() == 0);
  CHECK(poly(5, {0, 0}).is_zero());
  CHECK(poly(5, {}).degree() == -1);
  CHECK_THROWS_AS(PolyModP(4), std::invalid_argument);
}

TEST_CASE("polynomial text") {
  CHECK(poly(2, {1, 1, 1}).to_string() == "1 + x + x^2");
  CHECK(poly(5, {0, 2, 0, 1}).to_string() == "2*x + x^3");
  CHECK(poly(5, {}).to_string() == "0");
  CHECK(poly(7, {3}).to_string() == "3");
}

TEST_CASE("polynomial arithmetic") {
  auto a = poly(3, {1, 2});     // 1 + 2x
  auto b = poly(3, {2, 0, 1});  // 2 + x^2
  CHECK((a + b) == poly(3, {0, 2, 1}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == poly(3, {2, 1, 1, 2}));
  auto [q, r] = divmod(a * b + poly(3, {1}), b);
  CHECK(q == a);
  CHECK(r == poly(3, {1}));
  CHECK((b % a).degree() < a.degree());
  CHECK_THROWS_AS(divmod(a, PolyModP(3)), std::domain_error);
  CHECK(b.eval(1) == 0);
  CHECK(a.eval(2) == 2);
}

TEST_CASE("cyclotomic quotient and its factors") {
  CHECK(cyclotomic_quotient(3, 2) == poly(3, {1, 1}));
  CHECK(cyclotomic_quotient(2, 3) == poly(2, {1, 1, 1}));

  auto f27 = cyclotomic_factors(2, 7);
  REQUIRE(f27.size() == 2);
  CHECK(f27[0] == poly(2, {1, 1, 0, 1}));
  CHECK(f27[1] == poly(2, {1, 0, 1, 1}));

  for (auto [p, q] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 7u}, {5u, 11u}, {3u, 13u}, {2u, 5u},
                      {11u, 5u}, {5u, 3u}}) {
    CAPTURE(p);
    CAPTURE(q);
    auto     fs = cyclotomic_factors(p, q);
    unsigned u  = multiplicative_order(p, q);
    CHECK(fs.size() == (q - 1) / u);
    PolyModP prod(p, {1});
    for (auto const& f : fs) {
      CHECK(f.degree() == static_cast<int>(u));
      CHECK(f.is_monic());
      prod = prod * f;
    }
    CHECK(prod == cyclotomic_quotient(p, q));
  }
}

TEST_CASE("residue ring choice of psi") {
  auto r32 = build_residue_ring(3, 2);
  CHECK(r32.psi() == poly(3, {1, 1}));
  CHECK(r32.u() == 1);
  CHECK(r32.size() == 3);
  auto r23 = build_residue_ring(2, 3);
  CHECK(r23.psi() == poly(2, {1, 1, 1}));
  CHECK(r23.u() == 2);
  auto r27 = build_residue_ring(2, 7);
  CHECK(r27.psi() == poly(2, {1, 1, 0, 1}));
  CHECK(r27.u() == 3);
  CHECK_THROWS_WITH_AS(build_residue_ring(2, 2), "p and q must be distinct primes",
                       std::invalid_argument);
  CHECK_THROWS_AS(build_residue_ring(4, 3), std::invalid_argument);
}

TEST_CASE("residue ring rejects bad moduli") {
  // reducible: (x + 1)^2 over Z_3 does not divide x + 1
  CHECK_THROWS_AS(ResidueRing(3, 2, poly(3, {1, 2, 1})), std::invalid_argument);
  // wrong degree
  CHECK_THROWS_AS(ResidueRing(2, 7, poly(2, {1, 1})), std::invalid_argument);
  // right degree, not a divisor
  CHECK_THROWS_AS(ResidueRing(2, 3, poly(2, {1, 0, 1})), std::invalid_argument);
  // not monic
  CHECK_THROWS_AS(ResidueRing(3, 2, poly(3, {2, 2})), std::invalid_argument);
  CHECK_NOTHROW(ResidueRing(2, 7, poly(2, {1, 0, 1, 1})));
}

TEST_CASE("field arithmetic in Z_2[x]/(x^2 + x + 1)") {
  auto r = build_residue_ring(2, 3);
  auto x = r.x();
  auto one = r.one();
  auto xp1 = r.add(x, one);
  CHECK(r.inverse(xp1) == x);
  CHECK(r.mul(xp1, x) == one);
  CHECK(r.mul(one, xp1) == xp1);
  CHECK(r.substitute_power(x, 2) == xp1);
  CHECK(r.substitute_power(x, 1) == x);
  CHECK(r.substitute_power(one, 5) == one);
  CHECK(r.pow(x, 3) == one);
  CHECK_THROWS_AS(r.inverse(r.zero()), std::domain_error);
}

TEST_CASE("every residue ring is a field in which x has order q") {
  for (auto [p, q] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 7u}, {5u, 3u}, {3u, 13u}, {2u, 5u},
                      {7u, 3u}, {3u, 7u}, {2u, 11u}}) {
    CAPTURE(p);
    CAPTURE(q);
    auto r = build_residue_ring(p, q);
    REQUIRE(r.size() <= 4096);
    for (std::size_t i = 1; i < r.size(); ++i) {
      auto a   = r.element(i);
      auto inv = r.inverse(a);
      REQUIRE(r.mul(a, inv) == r.one());
      REQUIRE(r.mul(inv, a) == r.one());
      REQUIRE(r.index(a) == i);
    }
    CHECK(r.pow(r.x(), q) == r.one());
    for (unsigned k = 1; k < q; ++k) {
      CHECK(r.pow(r.x(), k) != r.one());
    }
    CHECK(r.psi().eval(1) != 0);
    CHECK(r.mul(r.sub(r.x(), r.one()), r.x_minus_one_inverse()) == r.one());
  }
}

TEST_CASE("substitution by a power of p is the Frobenius map") {
  for (auto [p, q] : {std::pair{2u, 7u}, {2u, 3u}, {3u, 13u}, {5u, 3u}}) {
    auto r = build_residue_ring(p, q);
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto a = r.element(i);
      CHECK(r.substitute_power(a, p) == r.pow(a, p));
      CHECK(r.substitute_power(a, p + q) == r.pow(a, p));
      for (std::size_t j = 0; j < r.size(); ++j) {
        auto b = r.element(j);
        std::uint64_t n = p * p;
        REQUIRE(r.substitute_power(r.mul(a, b), n)
                == r.mul(r.substitute_power(a, n), r.substitute_power(b, n)));
      }
    }
  }
}
