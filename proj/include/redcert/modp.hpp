#ifndef REDCERT_MODP_HPP
#define REDCERT_MODP_HPP

#include <cstdint>
#include <vector>

#include "redcert/poly.hpp"

namespace redcert {

/// Coefficientwise reduction of a primitive integer polynomial mod a prime.
/// Primitivity guarantees the reduction is nonzero.  Throws on a composite
/// modulus or non-primitive input.
FpPoly reduce_mod_p(const ZPoly& f, std::uint64_t p);
FpBigPoly reduce_mod_p(const ZPoly& f, const mpz_class& p);

/// True iff f (nonzero) has no repeated irreducible factor over F_p.
/// Computes gcd(f, df/dT_0, ..., df/dT_n) by iterated multivariate gcd; f is
/// squarefree iff the gcd is a nonzero constant.  A polynomial whose partials
/// all vanish is a p-th power, hence reported non-squarefree unless constant.
bool squarefree_mod_p(const FpPoly& f);
bool squarefree_mod_p(const FpBigPoly& f);

/// Membership test behind the oracle: is the reduction of (primitive) f mod p
/// non-squarefree?  Dispatches on the size of p.
bool bad_reduction_at(const ZPoly& f_primitive, const mpz_class& p);

/// All primes p <= p_max at which the primitive part of the (squarefree,
/// homogeneous) hypersurface equation f acquires a square factor mod p.
/// This is Q(I_f) intersected with [2, p_max].  Scans are independent per
/// prime and run on the caller's thread.
std::vector<std::uint64_t> oracle_bad_primes(const QPoly& f, std::uint64_t p_max);

}  // namespace redcert

#endif
