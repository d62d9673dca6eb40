#ifndef REDCERT_BOUNDS_HPP
#define REDCERT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redcert/poly.hpp"
#include "redcert/real.hpp"

namespace redcert {

/// Raised when an input violates a theorem hypothesis (e.g. a hypersurface
/// equation with a square factor over Q).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Explicit bound formulas.  degK is the degree [K:Q]; it is kept as a formula
// parameter although certification itself runs over Q (degK = 1).

/// log of  C(delta+n, n)^((2 delta - 1) degK / 2) * delta^(delta degK)
///         * exp(degK h)^(2 delta - 1)
/// for a reduced hypersurface of degree delta in P^n with classical height h.
Real hypersurface_bound_log(unsigned n, unsigned delta, unsigned degK, const Real& h,
                            mpfr_prec_t prec = 128);

/// Bound on the number of primes of norm >= N0 with non-reduced reduction:
/// (degK / log N0) ((2 delta - 1) h + delta log delta
///                  + (2 delta - 1)/2 log C(n+delta, delta)).
Real hypersurface_count_bound(unsigned n, unsigned delta, unsigned degK, const Real& h,
                              double n0, mpfr_prec_t prec = 128);

/// log of the pure-dimension bound with N = C(n+1, d+1) - 1 and H_N the
/// harmonic number:
///   (2d-1)degK/2 log C(delta+N, N) + delta degK log delta
///   + (2 delta - 1) degK (h - delta H_N / 2 + 4 delta log(N+1)
///                         + (N+1) delta log 2).
Real pure_dim_bound_log(unsigned n, unsigned d, unsigned delta, unsigned degK,
                        const Real& arakelov_h, mpfr_prec_t prec = 128);

Real pure_dim_count_bound(unsigned n, unsigned d, unsigned delta, unsigned degK,
                          const Real& arakelov_h, double n0, mpfr_prec_t prec = 128);

/// The height-free part of the pure-dimension count bound; grows like
/// delta^2 for fixed (d, n).
Real c1_constant(unsigned d, unsigned n, unsigned delta, mpfr_prec_t prec = 128);

/// Checks C1(d,n,delta) <= delta^2 * (2(-H_N/2 + (N+1) log 2) + 9 log(N+1)
/// + 0.4) for every delta in [1, 50]; a computable form of C1 << delta^2.
bool c1_growth_bounded(unsigned d, unsigned n, mpfr_prec_t prec = 128);

// ---------------------------------------------------------------------------
// omega_K(a; N0) over Q.

struct OmegaResult {
  unsigned count = 0;            // distinct primes p >= N0 dividing a
  double bound = 0.0;            // log|a| / log N0
  std::vector<mpz_class> primes; // the counted primes, ascending
  bool holds = true;             // count <= bound
};

OmegaResult omega_count(const mpz_class& a, double n0);

/// The three inequalities of the auxiliary constants lemma, verified in
/// exact integer arithmetic (the r-inequality via exact exponent
/// comparison).  a_i >= 1, r >= 1.
bool check_constante_inequalities(const std::vector<unsigned>& a, double r, int n);

// ---------------------------------------------------------------------------
// The recursive bad-prime certifier.

struct CertificateLevel {
  int var = 0;                  // eliminated variable at this level
  int degree = 0;               // degree of the level polynomial in that variable
  mpz_class sylvester_content;  // content of the derivation resultant (0 = zero ideal)
  mpz_class leading_content;    // content stripped from the leading coefficient
  ZPoly leading_coeff;          // primitivized leading coefficient recursed on
};

struct ResultantCertificate {
  ZPoly input_primitive;
  std::vector<CertificateLevel> levels;
  std::vector<mpz_class> prime_superset;  // ascending; primes of all level contents
  std::string terminal;
  /// True when some level's derivation resultant was the zero ideal (the
  /// level polynomial had a repeated factor); the superset then degenerates
  /// to all primes and `prime_superset` lists only the named ones.
  bool degenerate = false;
};

struct BoundVerdict {
  double bound_log = 0;
  double count_bound = 0;                  // at N0 = 2
  std::vector<mpz_class> oracle_primes;    // genuinely bad primes found
  std::vector<mpz_class> certified_superset;
  double product_log = 0;                  // log of the product of oracle primes
  bool containment = false;
  bool product_le_bound = false;
  bool count_le_bound = false;
  bool exact_compare_used = false;
  bool pass() const { return containment && product_le_bound && count_le_bound; }
};

struct CertifyOptions {
  unsigned degK = 1;
  /// Cap for the independent small-prime oracle scan.  The scan covers
  /// [2, min(cap, max named prime)] by default; pmax_override widens or
  /// narrows it independently of the certificate.
  std::uint64_t oracle_scan_cap = 1000;
  std::optional<std::uint64_t> pmax_override;
  mpfr_prec_t prec = 128;
};

struct HypersurfaceCertification {
  unsigned n = 0;      // ambient dimension: f lives in P^n
  unsigned delta = 0;  // total degree
  mpz_class height_witness;  // max |coefficient| of the primitive form
  double classical_h = 0;    // log of the witness
  ResultantCertificate certificate;
  BoundVerdict verdict;
};

/// Runs the leading-coefficient recursion on a squarefree homogeneous f,
/// collects the certified prime superset, and assembles the verdict against
/// the explicit bound.  Throws HypothesisError if f has a square factor
/// over Q, std::invalid_argument on zero/inhomogeneous input.
HypersurfaceCertification certify_hypersurface(const QPoly& f, const CertifyOptions& opts = {});

}  // namespace redcert

#endif
