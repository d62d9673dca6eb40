#include <doctest.h>

#include <cmath>
#include <complex>

#include "redcert/heights.hpp"
#include "redcert/rng.hpp"

using namespace redcert;

namespace {

// Deterministic Fubini-Study oracle on P^1.  With w = sqrt(s/(1-s)) e^(i phi)
// the FS probability measure becomes uniform in (s, phi), so a midpoint grid
// integrates log(|f(1,w)| / (1+|w|^2)^(delta/2)) directly.
double fs_p1_oracle(const QPoly& f, int ns = 8192, int nphi = 256) {
  REQUIRE(f.nvars() == 2);
  REQUIRE(f.is_homogeneous());
  const double delta = f.total_degree();
  long double acc = 0.0L;
  for (int i = 0; i < ns; ++i) {
    double s = (i + 0.5) / ns;
    double u = s / (1.0 - s);
    double r = std::sqrt(u);
    double logw = 0.5 * std::log1p(u);  // log sqrt(1+|w|^2)
    for (int j = 0; j < nphi; ++j) {
      double phi = 2.0 * M_PI * (j + 0.5) / nphi;
      std::complex<double> w = std::polar(r, phi);
      std::complex<double> val = 0.0;
      for (const auto& t : f.terms())
        val += t.coeff.get_d() * std::pow(w, double(t.mon.exp(1)));
      acc += std::log(std::abs(val)) - delta * logw;
    }
  }
  return double(acc / ((long double)ns * nphi));
}

QPoly random_homog(Rng& rng, int nvars, int deg, long cmax) {
  std::vector<std::pair<Monomial, mpq_class>> ts;
  std::function<void(int, int, Monomial)> walk = [&](int pos, int left, Monomial m) {
    if (pos == nvars - 1) {
      m.set_exp(pos, unsigned(left));
      if (rng.chance(0.8)) {
        long c = rng.range(-cmax, cmax);
        if (c) ts.emplace_back(m, mpq_class(c));
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      Monomial mm = m;
      mm.set_exp(pos, unsigned(k));
      walk(pos + 1, left - k, mm);
    }
  };
  walk(0, deg, Monomial::one());
  return QPoly::from_terms(nvars, ts);
}

}  // namespace

TEST_CASE("classical height examples") {
  CHECK(classical_height(parse_poly("T1^2 - 5*T0^2", 2)) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-14));
  CHECK(classical_height(parse_poly("2*T0 + 4*T1", 2)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(classical_height(parse_poly("T0 + T1", 2)) == doctest::Approx(0.0));
  // rational scaling leaves the height unchanged (it is a sum over all places)
  CHECK(classical_height(parse_poly("1/3*T1^2 - 5/3*T0^2", 2)) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-14));
  CHECK_THROWS_AS(classical_height(parse_poly("0", 2)), std::invalid_argument);
}

TEST_CASE("l2 norm examples") {
  CHECK(l2_norm_log(parse_poly("T0 + T1", 2)) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(l2_norm_log(parse_poly("3*T0", 2)) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(l2_norm_log(parse_poly("T1^2 - 5*T0^2", 2)) ==
        doctest::Approx(0.5 * std::log(26.0)).epsilon(1e-14));
}

TEST_CASE("mahler examples") {
  // M(2T) = 2 and M(T-1) = 1, exactly, via the Jensen path
  Estimate m1 = mahler_jensen(parse_poly("2*T0", 1));
  CHECK(m1.value == doctest::Approx(std::log(2.0)).epsilon(1e-13));
  Estimate m2 = mahler_jensen(parse_poly("T0 - 1", 1));
  CHECK(m2.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));

  // homogeneous binary form dehomogenizes to the Jensen path
  std::string method;
  Estimate m3 = mahler_measure_log(parse_poly("T1^2 - 5*T0^2", 2), {}, &method);
  CHECK(method == "jensen");
  CHECK(m3.value == doctest::Approx(std::log(5.0)).epsilon(1e-10));

  Estimate mono = mahler_measure_log(parse_poly("7*T0^2*T1", 2), {}, &method);
  CHECK(method == "exact-monomial");
  CHECK(mono.value == doctest::Approx(std::log(7.0)).epsilon(1e-14));
  CHECK(mono.error == 0.0);

  // M(1 + x + y): Smyth's constant
  Estimate smyth = mahler_torus_quadrature(parse_poly("1 + T0 + T1", 2));
  CHECK(smyth.converged);
  CHECK(smyth.value == doctest::Approx(0.3230659).epsilon(2e-5));
}

TEST_CASE("jensen vs torus quadrature on random univariate polynomials") {
  Rng rng(314159);
  int done = 0;
  for (int it = 0; it < 12; ++it) {
    int d = 1 + int(rng.below(6));
    std::vector<std::pair<Monomial, mpq_class>> ts;
    for (int i = 0; i <= d; ++i) {
      long c = rng.range(-20, 20);
      if (i == d && c == 0) c = 1 + rng.range(0, 18);
      if (c) ts.emplace_back(Monomial::var(0, unsigned(i)), mpq_class(c));
    }
    QPoly f = QPoly::from_terms(1, ts);
    if (f.is_zero() || f.is_monomial()) continue;
    Estimate jensen = mahler_jensen(f);
    Estimate quad = mahler_torus_quadrature(f);
    REQUIRE(quad.converged);
    CHECK(std::abs(jensen.value - quad.value) <= 1e-6);
    ++done;
  }
  CHECK(done >= 8);
}

TEST_CASE("zero norm examples") {
  // constant section and P^0
  CHECK(zero_norm_log(parse_poly("5", 1)).value == doctest::Approx(std::log(5.0)));
  CHECK(zero_norm_log(parse_poly("T0", 1)).value == doctest::Approx(0.0));

  // E[log|x_0|] over P^1 is -H_1/2 = -1/2
  Estimate z1 = zero_norm_log(parse_poly("T0", 2), {200000, 42});
  CHECK(std::abs(z1.value + 0.5) <= z1.error);

  // T0*T1 on P^1: exactly -1; also cross-check the deterministic FS oracle
  Estimate z2 = zero_norm_log(parse_poly("T0*T1", 2), {200000, 43});
  CHECK(std::abs(z2.value + 1.0) <= z2.error);
  double oracle = fs_p1_oracle(parse_poly("T0*T1", 2));
  CHECK(std::abs(oracle + 1.0) <= 2e-3);

  // a generic binary cubic against the deterministic oracle
  QPoly g = parse_poly("3*T1^3 - 2*T0*T1^2 + 7*T0^2*T1 + T0^3", 2);
  Estimate zg = zero_norm_log(g, {300000, 44});
  CHECK(std::abs(zg.value - fs_p1_oracle(g)) <= zg.error + 2e-3);
}

TEST_CASE("zero norm is deterministic given (seed, batch plan)") {
  QPoly f = parse_poly("T0^2 + 3*T0*T1 - T1^2", 2);
  Estimate a = zero_norm_log(f, {50000, 7, 1});
  Estimate b = zero_norm_log(f, {50000, 7, 2});  // different thread count
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
}

TEST_CASE("philippon examples") {
  Estimate p1 = philippon_height(parse_poly("T0 + T1", 2));
  CHECK(std::abs(p1.value) <= p1.error + 1e-10);

  // the finite part -log(content) cancels the content inside the Mahler
  // term, so the Philippon height is scaling-invariant: h_Ph(2 T0) = 0
  Estimate p2 = philippon_height(parse_poly("2*T0", 1));
  CHECK(p2.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(p2.value ==
        doctest::Approx(philippon_height(parse_poly("T0", 1)).value).scale(1.0).epsilon(1e-12));

  Estimate p3 = philippon_height(parse_poly("T1^2 - 5*T0^2", 2));
  CHECK(p3.value == doctest::Approx(std::log(5.0)).epsilon(1e-9));

  // finite part: content 1/6 contributes -log(1/6) = +log 6... against the
  // raw-Mahler term log(1/6 * M(prim)) the total is the primitive Mahler
  Estimate p4 = philippon_height(parse_poly("1/2*T0 + 1/3*T1", 2));
  Estimate prim = mahler_measure_log(parse_poly("3*T0 + 2*T1", 2));
  CHECK(p4.value == doctest::Approx(prim.value).epsilon(1e-9));
}

TEST_CASE("height report and inequality table") {
  HeightReport r = height_report(parse_poly("T1^2 - 5*T0^2", 2), {}, {100000, 9});
  CHECK(r.homogeneous);
  CHECK(r.classical == doctest::Approx(std::log(5.0)));
  CHECK(r.classical_witness == 5);
  CHECK(r.l2 == doctest::Approx(0.5 * std::log(26.0)));
  CHECK(r.philippon.value == doctest::Approx(std::log(5.0)).epsilon(1e-9));
  REQUIRE(!r.inequalities.empty());
  for (const auto& iq : r.inequalities) {
    CAPTURE(iq.name);
    CHECK(iq.pass);
  }

  HeightReport planted = height_report(parse_poly("T0^2 + 2*T0*T1 + T1^2", 2), {}, {100000, 10});
  Estimate base = mahler_measure_log(parse_poly("T0 + T1", 2));
  // multiplicativity on a planted square: M((T0+T1)^2) = 2 M(T0+T1)
  CHECK(std::abs(planted.mahler.value - 2.0 * base.value) <=
        planted.mahler.error + 2.0 * base.error + 1e-9);
  for (const auto& iq : planted.inequalities) {
    CAPTURE(iq.name);
    CHECK(iq.pass);
  }
}

TEST_CASE("inequality suite on a random homogeneous corpus") {
  Rng rng(2718281);
  int checked = 0;
  for (int it = 0; it < 12; ++it) {
    int n = 1 + int(rng.below(2));       // P^1 or P^2
    int delta = 1 + int(rng.below(4));   // degree <= 4
    QPoly f = random_homog(rng, n + 1, delta, 99);
    if (f.is_zero()) continue;
    HeightReport r = height_report(f, {}, {60000, std::uint64_t(1000 + it)});
    for (const auto& iq : r.inequalities) {
      CAPTURE(to_string(f));
      CAPTURE(iq.name);
      CAPTURE(iq.lhs);
      CAPTURE(iq.rhs);
      CHECK(iq.pass);
    }
    ++checked;
  }
  CHECK(checked >= 9);
}
