#include <doctest.h>

#include <cmath>

#include "redcert/bounds.hpp"
#include "redcert/modp.hpp"
#include "redcert/rng.hpp"

using namespace redcert;

TEST_CASE("hypersurface bound plug-ins") {
  // (n=1, delta=2, degK=1, h=log 5): log(3^(3/2) * 4 * 125)
  double b = hypersurface_bound_log(1, 2, 1, Real::of(std::log(5.0))).to_double();
  CHECK(b == doctest::Approx(1.5 * std::log(3.0) + std::log(4.0) + 3 * std::log(5.0))
                 .epsilon(1e-12));
  CHECK(std::exp(b) == doctest::Approx(2598.08).epsilon(1e-4));

  // (n=1, delta=1, degK=1, h=0): (1/2) log 2
  CHECK(hypersurface_bound_log(1, 1, 1, Real::of(0.0)).to_double() ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));

  // (n=2, delta=2, degK=2, h=0): 3 log 6 + 4 log 2
  CHECK(hypersurface_bound_log(2, 2, 2, Real::of(0.0)).to_double() ==
        doctest::Approx(3 * std::log(6.0) + 4 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("hypersurface count bound plug-ins") {
  double c = hypersurface_count_bound(1, 2, 1, Real::of(std::log(5.0)), 2.0).to_double();
  double expect = (3 * std::log(5.0) + 2 * std::log(2.0) + 1.5 * std::log(3.0)) / std::log(2.0);
  CHECK(c == doctest::Approx(expect).epsilon(1e-12));
  CHECK(c == doctest::Approx(11.34).epsilon(1e-3));

  CHECK(hypersurface_count_bound(1, 1, 1, Real::of(0.0), 2.0).to_double() ==
        doctest::Approx(0.5 * std::log(2.0) / std::log(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(hypersurface_count_bound(1, 2, 1, Real::of(0.0), 1.5),
                  std::invalid_argument);
}

TEST_CASE("pure dimension bound plug-ins") {
  // (n=1, d=0, delta=2, degK=1, h=log 2): N=1, H_1=1
  double b = pure_dim_bound_log(1, 0, 2, 1, Real::of(std::log(2.0))).to_double();
  double expect = 1.5 * std::log(3.0) + 2.0 * std::log(2.0) +
                  3.0 * (std::log(2.0) - 1.0 + 8.0 * std::log(2.0) + 4.0 * std::log(2.0));
  CHECK(b == doctest::Approx(expect).epsilon(1e-12));

  // delta = 1 cycles have no bad primes; the bound is just a valid number
  CHECK(pure_dim_bound_log(1, 0, 1, 1, Real::of(0.0)).is_finite());

  // count bound mirrors the same plug-in structure
  double cb = pure_dim_count_bound(1, 0, 2, 1, Real::of(std::log(2.0)), 2.0).to_double();
  double inner = 3.0 * std::log(2.0) - 1.5 * 2.0 * 1.0 + (12.0 + 1.5) * 2.0 * std::log(2.0) +
                 3.0 * 2.0 * 2.0 * std::log(2.0) + 2.0 * std::log(2.0);
  CHECK(cb == doctest::Approx(inner / std::log(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(pure_dim_bound_log(1, 1, 2, 1, Real::of(0.0)), std::invalid_argument);
}

TEST_CASE("c1 constant") {
  // (0,1,1): N=1: C1 = 1*1*(-1/2) + (4+1/2)*1*log2 + 1*2*log2 + 0
  double c = c1_constant(0, 1, 1).to_double();
  CHECK(c == doctest::Approx(-0.5 + 4.5 * std::log(2.0) + 2.0 * std::log(2.0)).epsilon(1e-12));

  // (0,1,2) plug-in
  double c2 = c1_constant(0, 1, 2).to_double();
  CHECK(c2 == doctest::Approx(-3.0 + 13.5 * 2.0 * std::log(2.0) + 12.0 * std::log(2.0) +
                              2.0 * std::log(2.0))
                  .epsilon(1e-12));

  CHECK(c1_growth_bounded(0, 1));
  CHECK(c1_growth_bounded(0, 2));
  CHECK(c1_growth_bounded(0, 3));
  CHECK(c1_growth_bounded(1, 2));
  CHECK(c1_growth_bounded(2, 3));
}

TEST_CASE("omega_count") {
  OmegaResult r = omega_count(mpz_class(12), 2.0);
  CHECK(r.count == 2);
  CHECK(r.bound == doctest::Approx(std::log(12.0) / std::log(2.0)).epsilon(1e-12));
  CHECK(r.holds);

  OmegaResult one = omega_count(mpz_class(1), 2.0);
  CHECK(one.count == 0);
  CHECK(one.bound == 0.0);
  CHECK(one.holds);

  OmegaResult five = omega_count(mpz_class(125), 3.0);
  CHECK(five.count == 1);
  CHECK(five.primes == std::vector<mpz_class>{mpz_class(5)});
  CHECK(five.bound == doctest::Approx(3 * std::log(5.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(five.holds);

  CHECK_THROWS_AS(omega_count(mpz_class(0), 2.0), std::invalid_argument);

  Rng rng(606);
  for (int it = 0; it < 1000; ++it) {
    mpz_class a = 1 + long(rng.below(1000000000000ull));
    for (double n0 : {2.0, 10.0, 100.0}) CHECK(omega_count(a, n0).holds);
  }
}

TEST_CASE("constante inequalities") {
  CHECK(check_constante_inequalities({1}, 1.0, 3));
  CHECK(check_constante_inequalities({1}, 7.5, 3));
  CHECK(check_constante_inequalities({2, 3}, 2.0, 3));
  CHECK(check_constante_inequalities({1, 1, 1}, 1.0, 2));

  Rng rng(909);
  for (int it = 0; it < 1000; ++it) {
    std::vector<unsigned> a(1 + rng.below(6));
    for (auto& x : a) x = unsigned(1 + rng.below(9));
    double r = 1.0 + 9.0 * rng.uniform();
    int n = int(1 + rng.below(5));
    CHECK(check_constante_inequalities(a, r, n));
  }
}

TEST_CASE("certify_hypersurface worked instance T1^2 - 5 T0^2") {
  auto cert = certify_hypersurface(parse_poly("T1^2 - 5*T0^2", 2));
  CHECK(cert.n == 1);
  CHECK(cert.delta == 2);
  CHECK(cert.height_witness == 5);

  REQUIRE(cert.certificate.levels.size() == 1);
  CHECK(cert.certificate.levels[0].var == 1);
  CHECK(cert.certificate.levels[0].degree == 2);
  CHECK(cert.certificate.levels[0].sylvester_content == 20);
  CHECK(cert.certificate.levels[0].leading_content == 1);
  CHECK(!cert.certificate.degenerate);

  CHECK(cert.certificate.prime_superset ==
        std::vector<mpz_class>{mpz_class(2), mpz_class(5)});
  CHECK(cert.verdict.oracle_primes ==
        std::vector<mpz_class>{mpz_class(2), mpz_class(5)});
  CHECK(cert.verdict.product_log == doctest::Approx(std::log(10.0)).epsilon(1e-12));
  CHECK(cert.verdict.bound_log ==
        doctest::Approx(1.5 * std::log(3.0) + std::log(4.0) + 3 * std::log(5.0))
            .epsilon(1e-12));
  CHECK(cert.verdict.containment);
  CHECK(cert.verdict.product_le_bound);
  CHECK(cert.verdict.count_le_bound);
  CHECK(cert.verdict.exact_compare_used);  // bound ~ 2598 < 2^64
  CHECK(cert.verdict.pass());
}

TEST_CASE("certify_hypersurface hyperplane and error paths") {
  auto hyper = certify_hypersurface(parse_poly("T0 + T1", 2));
  CHECK(hyper.certificate.prime_superset.empty());
  CHECK(hyper.verdict.oracle_primes.empty());
  CHECK(hyper.verdict.product_log == 0.0);
  CHECK(hyper.verdict.pass());

  // three distinct rational points on P^1: oracle must stay inside superset
  auto three = certify_hypersurface(parse_poly("T0^2*T1 + T0*T1^2", 2));
  CHECK(three.verdict.containment);
  CHECK(three.verdict.pass());

  CHECK_THROWS_AS(certify_hypersurface(parse_poly("T0^2 + 2*T0*T1 + T1^2", 2)),
                  HypothesisError);
  CHECK_THROWS_AS(certify_hypersurface(parse_poly("T0^2 + T1", 2)), std::invalid_argument);
  CHECK_THROWS_AS(certify_hypersurface(parse_poly("0", 2)), std::invalid_argument);
}

TEST_CASE("certify_hypersurface respects the recursion contract") {
  // dense-ish cubic surface in P^2
  auto cert = certify_hypersurface(
      parse_poly("3*T2^3 + 2*T2^2*T0 - 7*T1^2*T2 + T0*T1*T2 + 11*T0^3 - T0^2*T1", 3));
  // level degrees strictly decrease in total degree of the recursed leading
  // coefficient, and every oracle prime is certified
  int prev_total = int(cert.delta);
  for (const auto& lvl : cert.certificate.levels) {
    CHECK(lvl.degree >= 1);
    if (!lvl.leading_coeff.is_zero()) {
      CHECK(lvl.leading_coeff.total_degree() < prev_total);
      prev_total = lvl.leading_coeff.total_degree();
    }
  }
  CHECK(cert.certificate.levels.size() <= cert.delta);
  CHECK(cert.verdict.containment);
  CHECK(cert.verdict.product_le_bound);
}

TEST_CASE("degenerate certificates are reported, not hidden") {
  // f = T0^2 T2^2 + T0 T1^2 T2 + T0^2 T1^2 is squarefree, but the recursion
  // picks T2 and lands on the leading coefficient T0^2, whose derivation
  // resultant is the zero ideal.
  QPoly f = parse_poly("T0^2*T2^2 + T0*T1^2*T2 + T0^2*T1^2", 3);
  REQUIRE(is_squarefree_q(f));
  auto cert = certify_hypersurface(f);
  CHECK(cert.certificate.degenerate);
  CHECK(cert.verdict.containment);  // all primes trivially contains the oracle
  // the bound itself is still the theorem's bound for f
  CHECK(cert.verdict.product_le_bound);
}
