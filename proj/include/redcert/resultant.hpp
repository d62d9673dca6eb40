#ifndef REDCERT_RESULTANT_HPP
#define REDCERT_RESULTANT_HPP

#include <vector>

#include "redcert/poly.hpp"

namespace redcert {

/// A resultant realized over ZZ[T...]: the Sylvester-type determinant in the
/// non-eliminated variables together with its integer content.  The ideal it
/// generates is the zero ideal iff det = 0.
struct ResultantValue {
  ZPoly det;
  mpz_class content;  // gcd of det's coefficients; 0 iff det = 0
  bool is_zero_ideal = false;
};

/// Determinant by fraction-free Bareiss elimination over ZZ[T...].
/// Pivots prefer structurally sparse entries (fewest terms, then smaller
/// graded-lex leading monomial).
ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m);

/// The (m,n)-resultant determinant of f and g eliminating T_var, with
/// declared degree bounds m >= deg_var(f), n >= deg_var(g) (zero-padding
/// above the true degree is allowed and may force the zero ideal).  The
/// matrix has n rows of f-coefficients and m rows of g-coefficients.
ResultantValue sylvester_resultant(const ZPoly& f, const ZPoly& g, int var, int m, int n);

/// Rational convenience overload: both inputs are primitivized first.
ResultantValue sylvester_resultant(const QPoly& f, const QPoly& g, int var, int m, int n);

/// True iff the (deg_f, deg_g)-resultant in T_var is the zero ideal, i.e.
/// iff f and g share a factor of positive degree in T_var.
bool resultant_is_zero(const QPoly& f, const QPoly& g, int var);

/// res_(d, d-1)(f, df/dT_var) on the primitive part of f, where d is the
/// degree of f in T_var (d >= 1).  The derivative is taken of the primitive
/// form and not rescaled, so the content keeps every prime at which the
/// reduction degenerates.  For d = 1 the matrix is the 1x1 [t_1].
ResultantValue derivation_resultant(const QPoly& f, int var);
ResultantValue derivation_resultant(const ZPoly& f_primitive, int var);

}  // namespace redcert

#endif
