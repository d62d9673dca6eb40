#include <doctest.h>

#include "redcert/modp.hpp"
#include "redcert/rng.hpp"

using namespace redcert;

namespace {

// Exhaustive square-divisor oracle for univariate f over F_p (small p, small
// degree): f is squarefree iff no monic g with deg >= 1 satisfies g^2 | f.
bool squarefree_by_trial(const FpPoly& f) {
  const Fp ring = f.ring();
  int d = f.degree_in(0);
  if (d <= 1) return true;
  // enumerate monic polynomials of degree 1..d/2 by digits
  for (int dg = 1; 2 * dg <= d; ++dg) {
    std::uint64_t count = 1;
    for (int i = 0; i < dg; ++i) count *= ring.p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::pair<Monomial, std::uint64_t>> ts;
      ts.emplace_back(Monomial::var(0, unsigned(dg)), 1);
      std::uint64_t c = code;
      for (int i = 0; i < dg; ++i) {
        std::uint64_t digit = c % ring.p;
        c /= ring.p;
        if (digit) ts.emplace_back(Monomial::var(0, unsigned(i)), digit);
      }
      FpPoly g = FpPoly::from_terms(1, ts, ring);
      FpPoly q(1, ring);
      if (FpPoly::try_divide(f, g * g, q)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("reduction examples") {
  ZPoly f = to_integer(parse_poly("T1^2 - 5*T0^2", 2));
  CHECK(to_string(reduce_mod_p(f, 5)) == "T1^2");
  CHECK(to_string(reduce_mod_p(f, 3)) == "T1^2 + T0^2");
  ZPoly g = to_integer(parse_poly("6*T0 + T1", 2));
  CHECK(to_string(reduce_mod_p(g, 2)) == "T1");

  CHECK_THROWS_AS(reduce_mod_p(to_integer(parse_poly("2*T0 + 4*T1", 2)), 3),
                  std::invalid_argument);  // not primitive
  CHECK_THROWS_AS(reduce_mod_p(f, 6), std::invalid_argument);  // composite p
}

TEST_CASE("squarefree_mod_p examples") {
  ZPoly f = to_integer(parse_poly("T1^2 - 5*T0^2", 2));
  CHECK(!squarefree_mod_p(reduce_mod_p(f, 5)));   // T1^2
  CHECK(squarefree_mod_p(reduce_mod_p(f, 3)));    // T1^2 + T0^2 over F_3
  CHECK(!squarefree_mod_p(reduce_mod_p(f, 2)));   // (T0+T1)^2 over F_2

  ZPoly sq = to_integer(parse_poly("T0^2 + 2*T0*T1 + T1^2", 2));
  CHECK(!squarefree_mod_p(reduce_mod_p(sq, 2)));  // all partials vanish mod 2

  // Frobenius edge: T0^2*T1^2 + T0^2 + T1^2 + 1 = (T0^2+1)(T1^2+1) mod 2,
  // and mod 2 that is (T0+1)^2 (T1+1)^2
  ZPoly fr = to_integer(parse_poly("T0^2*T1^2 + T0^2 + T1^2 + 1", 2));
  CHECK(!squarefree_mod_p(reduce_mod_p(fr, 2)));

  // big-modulus route agrees with the word-sized one
  mpz_class big("18446744073709551629");  // prime > 2^64
  ZPoly h = to_integer(parse_poly("T1^2 - 5*T0^2", 2));
  CHECK(squarefree_mod_p(reduce_mod_p(h, big)));
  CHECK(bad_reduction_at(h, mpz_class(5)));
  CHECK(!bad_reduction_at(h, mpz_class(7)));
}

TEST_CASE("squarefree_mod_p agrees with exhaustive trial division") {
  Rng rng(7777);
  int nonsf = 0;
  for (int it = 0; it < 400; ++it) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng.below(4)];
    int d = 1 + int(rng.below(6));
    std::vector<std::pair<Monomial, std::uint64_t>> ts;
    ts.emplace_back(Monomial::var(0, unsigned(d)), 1 + rng.below(p - 1));
    for (int i = 0; i < d; ++i) {
      std::uint64_t c = rng.below(p);
      if (c) ts.emplace_back(Monomial::var(0, unsigned(i)), c);
    }
    FpPoly f = FpPoly::from_terms(1, ts, Fp(p));
    bool fast = squarefree_mod_p(f);
    bool slow = squarefree_by_trial(f);
    CHECK(fast == slow);
    if (!slow) ++nonsf;
  }
  CHECK(nonsf > 20);
}

TEST_CASE("oracle_bad_primes examples") {
  auto bad = oracle_bad_primes(parse_poly("T1^2 - 5*T0^2", 2), 100);
  CHECK(bad == std::vector<std::uint64_t>{2, 5});

  CHECK(oracle_bad_primes(parse_poly("T0 + T1", 2), 100).empty());

  auto two = oracle_bad_primes(parse_poly("T0^2 - T1^2", 2), 10);
  CHECK(two == std::vector<std::uint64_t>{2});

  CHECK_THROWS_AS(oracle_bad_primes(parse_poly("T0^2 + 2*T0*T1 + T1^2", 2), 10),
                  std::invalid_argument);
}
