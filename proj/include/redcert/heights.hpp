#ifndef REDCERT_HEIGHTS_HPP
#define REDCERT_HEIGHTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "redcert/poly.hpp"

namespace redcert {

/// A numerical value with a reported error bound.  Estimators set
/// converged = false (and error = +inf) when the sample budget ran out
/// before the target accuracy was met.
struct Estimate {
  double value = 0;
  double error = 0;
  bool converged = true;
};

struct MahlerOptions {
  std::uint64_t max_points = std::uint64_t(1) << 22;  // evaluation budget
  double target = 1e-9;  // refinement stops below this grid-to-grid delta
};

struct ZeroNormOptions {
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
  unsigned jobs = 0;  // 0 = all hardware threads
};

struct HeightInequality {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;      // rhs - lhs
  double tolerance = 0;  // quadrature / Monte Carlo allowance; 0 = exact check
  bool pass = false;
};

struct HeightReport {
  bool homogeneous = true;  // the 0-norm and the inequality table need this
  double classical = 0;
  mpz_class classical_witness;  // max |coefficient| of the primitive form
  mpq_class scale;              // f = scale * primitive
  double l2 = 0;
  Estimate mahler;
  std::string mahler_method;  // "exact-monomial" | "jensen" | "torus-quadrature"
  Estimate zero_norm;
  Estimate philippon;
  std::vector<HeightInequality> inequalities;
};

/// Classical height: sum over all places of log max |a_i|_v.  The finite
/// part telescopes against the content, so the value is log of the largest
/// |coefficient| of the primitive form.
double classical_height(const QPoly& f);
mpz_class classical_height_witness(const QPoly& f);

/// (1/2) log sum |a_i|^2 on the coefficients as given.
double l2_norm_log(const QPoly& f);

/// Mahler measure, log scale.  Univariate inputs go through Jensen's formula
/// over numerically computed roots; multivariate inputs through a
/// midpoint-rule torus quadrature with Aitken extrapolation, refined until
/// the grid-to-grid delta meets the target.  Homogeneous inputs are
/// dehomogenized first (the measure is invariant).
Estimate mahler_measure_log(const QPoly& f, const MahlerOptions& opts = {},
                            std::string* method = nullptr);

/// The two paths, exposed separately so they can be played against each
/// other as oracles.
Estimate mahler_jensen(const QPoly& f);
Estimate mahler_torus_quadrature(const QPoly& f, const MahlerOptions& opts = {});

/// Monte Carlo estimate of the average of log |f| over the unitary-invariant
/// probability measure on P^n(C) (the log of the Fubini-Study 0-norm),
/// sampling normalized complex Gaussians.  error = 3 sd / sqrt(samples).
/// Deterministic given (seed, batch plan) regardless of thread count.
Estimate zero_norm_log(const QPoly& f, const ZeroNormOptions& opts = {});

/// Exact finite-place part (-log |content|) plus the Mahler term.
Estimate philippon_height(const QPoly& f, const MahlerOptions& opts = {});

/// Every height of f plus the comparison-inequality table.  f must be
/// nonzero; the inequality table needs homogeneous input.
HeightReport height_report(const QPoly& f, const MahlerOptions& mopts = {},
                           const ZeroNormOptions& zopts = {});

/// The comparison inequalities evaluated on an existing report.
std::vector<HeightInequality> check_height_inequalities(const QPoly& f,
                                                        const HeightReport& report);

}  // namespace redcert

#endif
