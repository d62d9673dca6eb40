#include "redcert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "redcert/factor.hpp"
#include "redcert/modp.hpp"
#include "redcert/resultant.hpp"

namespace redcert {

namespace {

mpz_class binom_z(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return b;
}

Real two_log(mpfr_prec_t prec) { return log(Real::of(2L, prec)); }

}  // namespace

Real hypersurface_bound_log(unsigned n, unsigned delta, unsigned degK, const Real& h,
                            mpfr_prec_t prec) {
  if (n < 1 || delta < 1 || degK < 1)
    throw std::invalid_argument("hypersurface_bound_log: parameters out of range");
  Real dk = Real::of(long(degK), prec);
  Real term1 = Real::of(long(2 * delta - 1), prec) * dk / Real::of(2L, prec) *
               log_binomial(delta + n, n, prec);
  Real term2 = Real::of(long(delta), prec) * dk * log(Real::of(long(delta), prec));
  Real term3 = Real::of(long(2 * delta - 1), prec) * dk * h;
  return term1 + term2 + term3;
}

Real hypersurface_count_bound(unsigned n, unsigned delta, unsigned degK, const Real& h,
                              double n0, mpfr_prec_t prec) {
  if (n0 < 2) throw std::invalid_argument("hypersurface_count_bound: N0 < 2");
  Real inner = Real::of(long(2 * delta - 1), prec) * h +
               Real::of(long(delta), prec) * log(Real::of(long(delta), prec)) +
               Real::of(long(2 * delta - 1), prec) / Real::of(2L, prec) *
                   log_binomial(n + delta, delta, prec);
  return Real::of(long(degK), prec) / log(Real::of(n0, prec)) * inner;
}

Real pure_dim_bound_log(unsigned n, unsigned d, unsigned delta, unsigned degK,
                        const Real& arakelov_h, mpfr_prec_t prec) {
  if (delta < 1 || degK < 1 || d + 1 > n)
    throw std::invalid_argument("pure_dim_bound_log: parameters out of range");
  unsigned long N = mpz_class(binom_z(long(n) + 1, long(d) + 1) - 1).get_ui();
  Real hn = harmonic(N, prec);
  Real dk = Real::of(long(degK), prec);
  Real twod1 = Real::of(long(2 * delta - 1), prec);
  Real del = Real::of(long(delta), prec);
  Real inner = arakelov_h - del * hn / Real::of(2L, prec) +
               Real::of(4L, prec) * del * log(Real::of(long(N) + 1, prec)) +
               Real::of(long(N) + 1, prec) * del * two_log(prec);
  return twod1 * dk / Real::of(2L, prec) * log_binomial(delta + N, N, prec) +
         del * dk * log(del) + twod1 * dk * inner;
}

Real pure_dim_count_bound(unsigned n, unsigned d, unsigned delta, unsigned degK,
                          const Real& arakelov_h, double n0, mpfr_prec_t prec) {
  if (n0 < 2) throw std::invalid_argument("pure_dim_count_bound: N0 < 2");
  if (delta < 1 || degK < 1 || d + 1 > n)
    throw std::invalid_argument("pure_dim_count_bound: parameters out of range");
  unsigned long N = mpz_class(binom_z(long(n) + 1, long(d) + 1) - 1).get_ui();
  Real hn = harmonic(N, prec);
  Real twod1 = Real::of(long(2 * delta - 1), prec);
  Real del = Real::of(long(delta), prec);
  Real logn1 = log(Real::of(long(N) + 1, prec));
  Real inner = twod1 * arakelov_h - twod1 / Real::of(2L, prec) * del * hn +
               (Real::of(4L, prec) * twod1 + twod1 / Real::of(2L, prec)) * del * logn1 +
               twod1 * Real::of(long(N) + 1, prec) * del * two_log(prec) + del * log(del);
  return Real::of(long(degK), prec) / log(Real::of(n0, prec)) * inner;
}

Real c1_constant(unsigned d, unsigned n, unsigned delta, mpfr_prec_t prec) {
  if (delta < 1 || d + 1 > n)
    throw std::invalid_argument("c1_constant: parameters out of range");
  unsigned long N = mpz_class(binom_z(long(n) + 1, long(d) + 1) - 1).get_ui();
  Real hn = harmonic(N, prec);
  Real twod1 = Real::of(long(2 * delta - 1), prec);
  Real del = Real::of(long(delta), prec);
  Real logn1 = log(Real::of(long(N) + 1, prec));
  return -twod1 / Real::of(2L, prec) * del * hn +
         (Real::of(4L, prec) * twod1 + twod1 / Real::of(2L, prec)) * del * logn1 +
         twod1 * Real::of(long(N) + 1, prec) * del * two_log(prec) + del * log(del);
}

bool c1_growth_bounded(unsigned d, unsigned n, mpfr_prec_t prec) {
  unsigned long N = mpz_class(binom_z(long(n) + 1, long(d) + 1) - 1).get_ui();
  Real hn = harmonic(N, prec);
  Real logn1 = log(Real::of(long(N) + 1, prec));
  // limit of C1/delta^2, plus slack covering the delta log delta term
  Real cap = Real::of(2L, prec) *
                 (Real::of(long(N) + 1, prec) * two_log(prec) - hn / Real::of(2L, prec)) +
             Real::of(9L, prec) * logn1 + Real::of(0.4, prec);
  for (unsigned delta = 1; delta <= 50; ++delta) {
    Real ratio =
        c1_constant(d, n, delta, prec) / Real::of(long(delta) * long(delta), prec);
    if (!(ratio <= cap)) return false;
  }
  return true;
}

OmegaResult omega_count(const mpz_class& a, double n0) {
  if (sgn(a) == 0) throw std::invalid_argument("omega_count: a = 0");
  if (n0 < 2) throw std::invalid_argument("omega_count: N0 < 2");
  OmegaResult out;
  mpz_class m = abs(a);
  if (m > 1) {
    for (const auto& p : prime_divisors(m))
      if (mpz_cmp_d(p.get_mpz_t(), n0) >= 0) out.primes.push_back(p);
  }
  out.count = unsigned(out.primes.size());
  out.bound = log(Real::of(m, 128)).to_double() / std::log(n0);
  out.holds = double(out.count) <= out.bound + 1e-12;
  return out;
}

bool check_constante_inequalities(const std::vector<unsigned>& a, double r, int n) {
  if (a.empty()) throw std::invalid_argument("check_constante_inequalities: empty sequence");
  if (r < 1) throw std::invalid_argument("check_constante_inequalities: r < 1");
  long m = long(a.size());
  unsigned long sum = 0;
  for (unsigned x : a) {
    if (x < 1) throw std::invalid_argument("check_constante_inequalities: a_i < 1");
    sum += x;
  }

  // (1) prod r^(2 a_i - 1) <= r^(2 sum - 1): exact exponent comparison for
  // r > 1, equality at r = 1.
  if (r > 1 && !(2 * long(sum) - m <= 2 * long(sum) - 1)) return false;

  // (2) prod a_i^{a_i} <= sum^sum, exactly.
  mpz_class lhs2 = 1, rhs2;
  for (unsigned x : a) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), x, x);
    lhs2 *= t;
  }
  mpz_ui_pow_ui(rhs2.get_mpz_t(), sum, sum);
  if (lhs2 > rhs2) return false;

  // (3) prod C(a_i + n - i + 1, n - i + 1)^(2 a_i - 1)
  //     <= C(sum + n, n)^(2 sum - 1), exactly, with C(x, k) = 0 for k < 0.
  mpz_class lhs3 = 1, rhs3;
  for (long i = 1; i <= m; ++i) {
    long k = n - i + 1;
    mpz_class base = binom_z(long(a[std::size_t(i - 1)]) + k, k);
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), base.get_mpz_t(), 2UL * a[std::size_t(i - 1)] - 1);
    lhs3 *= t;
  }
  mpz_pow_ui(rhs3.get_mpz_t(), binom_z(long(sum) + n, n).get_mpz_t(), 2UL * sum - 1);
  return lhs3 <= rhs3;
}

// ---------------------------------------------------------------------------

namespace {

/// Variable of maximal degree, ties broken toward the largest index.
int pick_variable(const ZPoly& f) {
  int best = -1, best_deg = 0;
  for (int v = 0; v < f.nvars(); ++v) {
    int d = f.degree_in(v);
    if (d >= best_deg && d >= 1) {  // >= realizes the largest-index tie-break
      best = v;
      best_deg = d;
    }
  }
  return best;
}

void add_primes(std::set<mpz_class>& superset, const mpz_class& content) {
  if (content <= 1) return;
  for (const auto& p : prime_divisors(content)) superset.insert(p);
}

}  // namespace

HypersurfaceCertification certify_hypersurface(const QPoly& f, const CertifyOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("certify_hypersurface: zero polynomial");
  if (!f.is_homogeneous())
    throw std::invalid_argument("certify_hypersurface: inhomogeneous input");
  if (f.nvars() < 2)
    throw std::invalid_argument("certify_hypersurface: ambient space must be P^n with n >= 1");
  if (f.is_constant())
    throw std::invalid_argument("certify_hypersurface: constant polynomial");
  if (!is_squarefree_q(f)) throw HypothesisError("input has a square factor over Q");

  HypersurfaceCertification out;
  out.n = unsigned(f.nvars() - 1);
  out.delta = unsigned(f.total_degree());

  ZPoly prim = content_primitive(f).prim;
  out.certificate.input_primitive = prim;
  mpz_class witness = 0;
  for (const auto& t : prim.terms()) witness = std::max(witness, mpz_class(abs(t.coeff)));
  out.height_witness = witness;
  Real h = log_mpz(witness, opts.prec);
  out.classical_h = h.to_double();

  // Leading-coefficient recursion.
  std::set<mpz_class> superset;
  ZPoly cur = prim;
  for (;;) {
    if (cur.is_constant()) {
      // a primitive chain terminates in a unit; its content is already out
      out.certificate.terminal = "constant leading coefficient";
      break;
    }
    int v = pick_variable(cur);
    CertificateLevel level;
    level.var = v;
    level.degree = cur.degree_in(v);

    ResultantValue rv = derivation_resultant(cur, v);
    level.sylvester_content = rv.content;
    if (rv.is_zero_ideal) {
      out.certificate.degenerate = true;
      out.certificate.levels.push_back(std::move(level));
      out.certificate.terminal =
          "zero resultant at level " + std::to_string(out.certificate.levels.size()) +
          ": level polynomial has a repeated factor; superset is all primes";
      break;
    }
    add_primes(superset, rv.content);

    ZPoly lead = cur.coefficients_in(v).back();
    mpz_class lead_content = int_content(lead);
    level.leading_content = lead_content;
    add_primes(superset, lead_content);
    ZPoly lead_prim = primitive_part(lead);
    level.leading_coeff = lead_prim;
    out.certificate.levels.push_back(std::move(level));
    cur = lead_prim;
  }
  out.certificate.prime_superset.assign(superset.begin(), superset.end());

  // Verdict assembly.
  BoundVerdict& verdict = out.verdict;
  Real bound = hypersurface_bound_log(out.n, out.delta, opts.degK, h, opts.prec);
  verdict.bound_log = bound.to_double();
  verdict.count_bound =
      hypersurface_count_bound(out.n, out.delta, opts.degK, h, 2.0, opts.prec).to_double();
  verdict.certified_superset = out.certificate.prime_superset;

  // Oracle: an independent scan of small primes plus a membership test of
  // every named prime.
  std::uint64_t scan_limit;
  if (opts.pmax_override) {
    scan_limit = *opts.pmax_override;
  } else {
    scan_limit = 0;
    for (const auto& p : verdict.certified_superset)
      if (p.fits_ulong_p())
        scan_limit = std::max(scan_limit, std::uint64_t(p.get_ui()));
      else
        scan_limit = opts.oracle_scan_cap;
    scan_limit = std::min(scan_limit, opts.oracle_scan_cap);
  }
  std::set<mpz_class> bad;
  for (std::uint64_t p : primes_up_to(scan_limit))
    if (bad_reduction_at(prim, mpz_class((unsigned long)p)))
      bad.insert(mpz_class((unsigned long)p));
  for (const auto& p : verdict.certified_superset) {
    if (p.fits_ulong_p() && p.get_ui() <= scan_limit) continue;
    if (bad_reduction_at(prim, p)) bad.insert(p);
  }
  verdict.oracle_primes.assign(bad.begin(), bad.end());

  Real product_log(opts.prec);
  mpz_class product = 1;
  for (const auto& p : verdict.oracle_primes) {
    product_log = product_log + log_mpz(p, opts.prec);
    product *= p;
  }
  verdict.product_log = product_log.to_double();

  verdict.containment =
      out.certificate.degenerate ||
      std::includes(verdict.certified_superset.begin(), verdict.certified_superset.end(),
                    verdict.oracle_primes.begin(), verdict.oracle_primes.end());
  verdict.product_le_bound = product_log <= bound;
  if (verdict.bound_log < 64.0 * std::log(2.0)) {
    // Exact route: comparing squares clears the half-integer exponent.
    // bound^2 = C(delta+n, n)^((2d-1)K) * delta^(2 delta K) * W^(2(2d-1)K).
    unsigned long e = (2UL * out.delta - 1UL) * opts.degK;
    mpz_class b2;
    mpz_bin_uiui(b2.get_mpz_t(), out.delta + out.n, out.n);
    mpz_pow_ui(b2.get_mpz_t(), b2.get_mpz_t(), e);
    mpz_class dpow, wpow;
    mpz_ui_pow_ui(dpow.get_mpz_t(), out.delta, 2UL * out.delta * opts.degK);
    mpz_pow_ui(wpow.get_mpz_t(), witness.get_mpz_t(), 2UL * e);
    b2 *= dpow * wpow;
    verdict.product_le_bound = product * product <= b2;
    verdict.exact_compare_used = true;
  }
  verdict.count_le_bound =
      double(verdict.oracle_primes.size()) <= verdict.count_bound + 1e-12;
  return out;
}

}  // namespace redcert
