#include "redcert/modp.hpp"

#include <stdexcept>

#include "redcert/factor.hpp"

namespace redcert {

namespace {

template <class R>
Poly<R> reduce_impl(const ZPoly& f, R ring) {
  if (f.is_zero()) throw std::invalid_argument("reduce_mod_p: zero polynomial");
  if (int_content(f) != 1) throw std::invalid_argument("reduce_mod_p: input not primitive");
  std::vector<std::pair<Monomial, typename R::Elem>> ts;
  ts.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    mpz_class r;
    if constexpr (std::is_same_v<R, Fp>) {
      mpz_mod_ui(r.get_mpz_t(), t.coeff.get_mpz_t(), (unsigned long)ring.p);
      ts.emplace_back(t.mon, r.get_ui());
    } else {
      mpz_mod(r.get_mpz_t(), t.coeff.get_mpz_t(), ring.p.get_mpz_t());
      ts.emplace_back(t.mon, r);
    }
  }
  return Poly<R>::from_terms(f.nvars(), ts, ring);
}

template <class R>
bool squarefree_impl(const Poly<R>& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_mod_p: zero polynomial");
  if (f.is_constant()) return true;
  Poly<R> acc = f;
  for (int v = 0; v < f.nvars(); ++v) {
    if (f.degree_in(v) <= 0) continue;
    Poly<R> dv = f.derivative(v);
    if (dv.is_zero()) continue;  // gcd(acc, 0) = acc
    acc = poly_gcd(acc, dv);
    if (acc.is_constant()) return true;
  }
  return acc.is_constant();
}

}  // namespace

FpPoly reduce_mod_p(const ZPoly& f, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("reduce_mod_p: modulus is not prime");
  return reduce_impl(f, Fp(p));
}

FpBigPoly reduce_mod_p(const ZPoly& f, const mpz_class& p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: modulus is not prime");
  return reduce_impl(f, FpBig(p));
}

bool squarefree_mod_p(const FpPoly& f) { return squarefree_impl(f); }
bool squarefree_mod_p(const FpBigPoly& f) { return squarefree_impl(f); }

bool bad_reduction_at(const ZPoly& f_primitive, const mpz_class& p) {
  if (p.fits_ulong_p() && p < mpz_class("9223372036854775808"))
    return !squarefree_mod_p(reduce_mod_p(f_primitive, std::uint64_t(p.get_ui())));
  return !squarefree_mod_p(reduce_mod_p(f_primitive, p));
}

std::vector<std::uint64_t> oracle_bad_primes(const QPoly& f, std::uint64_t p_max) {
  if (f.is_zero()) throw std::invalid_argument("oracle_bad_primes: zero polynomial");
  if (!f.is_homogeneous())
    throw std::invalid_argument("oracle_bad_primes: inhomogeneous input");
  if (!is_squarefree_q(f))
    throw std::invalid_argument("oracle_bad_primes: input has a square factor over Q");
  ZPoly prim = content_primitive(f).prim;
  std::vector<std::uint64_t> bad;
  if (prim.is_constant()) return bad;
  for (std::uint64_t p : primes_up_to(p_max))
    if (!squarefree_mod_p(reduce_mod_p(prim, p))) bad.push_back(p);
  return bad;
}

}  // namespace redcert
