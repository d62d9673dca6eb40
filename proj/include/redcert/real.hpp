#ifndef REDCERT_REAL_HPP
#define REDCERT_REAL_HPP

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace redcert {

/// Thin RAII wrapper over mpfr_t.  Bound formulas grow like H^(2*delta-1),
/// so comparisons are done at an explicit precision (default 128 bits) in
/// log space; doubles only appear at the reporting boundary.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec = 128) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(long x, mpfr_prec_t prec = 128) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(const mpz_class& x, mpfr_prec_t prec = 128) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static Real of(const mpq_class& x, mpfr_prec_t prec = 128) {
    Real r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  std::string str(std::size_t digits = 20) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", int(digits), v_);
    return buf;
  }

 private:
  mpfr_t v_;
  static mpfr_prec_t join(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
};

/// log C(n, k) computed from the exact binomial.
inline Real log_binomial(unsigned long n, unsigned long k, mpfr_prec_t prec = 128) {
  if (k > n) throw std::invalid_argument("log_binomial: k > n");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return log(Real::of(b, prec));
}

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
inline Real harmonic(unsigned long n, mpfr_prec_t prec = 128) {
  Real h(prec);
  for (unsigned long k = 1; k <= n; ++k) h = h + Real::of(1.0, prec) / Real::of(long(k), prec);
  return h;
}

inline Real log_mpz(const mpz_class& x, mpfr_prec_t prec = 128) {
  if (sgn(x) <= 0) throw std::domain_error("log_mpz: nonpositive argument");
  return log(Real::of(x, prec));
}

}  // namespace redcert

#endif
