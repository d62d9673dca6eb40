#ifndef REDCERT_RINGS_HPP
#define REDCERT_RINGS_HPP

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace redcert {

// Coefficient ring policies for Poly<R>.  A policy carries whatever runtime
// state the ring needs (the modulus for prime fields) and the handful of
// scalar operations the polynomial layer is generic over.

/// The rational field.
struct QQ {
  using Elem = mpq_class;
  static constexpr bool is_field = true;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static bool divides(const Elem& a, const Elem&) { return !is_zero(a); }
  static Elem div(const Elem& a, const Elem& b) { return a / b; }
  static Elem scalar_gcd(const Elem& a, const Elem& b) {
    return (is_zero(a) && is_zero(b)) ? zero() : one();
  }
  bool operator==(const QQ&) const { return true; }
};

/// The rational integers.
struct ZZ {
  using Elem = mpz_class;
  static constexpr bool is_field = false;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static bool divides(const Elem& a, const Elem& b) {
    return !is_zero(a) && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
  }
  static Elem div(const Elem& a, const Elem& b) {  // exact
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static Elem scalar_gcd(const Elem& a, const Elem& b) {
    Elem g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  bool operator==(const ZZ&) const { return true; }
};

/// Prime field with a word-sized modulus (p < 2^63; products fit __int128).
struct Fp {
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  std::uint64_t p = 2;

  Fp() = default;
  explicit Fp(std::uint64_t prime) : p(prime) {
    if (p < 2 || p >= (std::uint64_t(1) << 63))
      throw std::invalid_argument("Fp modulus out of range");
  }

  static Elem zero() { return 0; }
  static Elem one() { return 1; }
  static bool is_zero(Elem a) { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return Elem((unsigned __int128)(a) * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in Fp");
    return pow(a, p - 2);
  }
  bool divides(Elem a, Elem) const { return a != 0; }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  static Elem scalar_gcd(Elem a, Elem b) { return (a | b) ? 1 : 0; }
  bool operator==(const Fp& o) const { return p == o.p; }
};

/// Prime field with an arbitrary-precision modulus, for primes past 2^63
/// (these show up as factors of resultant contents).
struct FpBig {
  using Elem = mpz_class;
  static constexpr bool is_field = true;

  mpz_class p = 2;

  FpBig() = default;
  explicit FpBig(mpz_class prime) : p(std::move(prime)) {}

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  Elem reduce(const Elem& a) const {
    Elem r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem s = a + b;
    if (s >= p) s -= p;
    return s;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem s = a - b;
    if (sgn(s) < 0) s += p;
    return s;
  }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem neg(const Elem& a) const { return is_zero(a) ? a : Elem(p - a); }
  Elem inv(const Elem& a) const {
    Elem r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
      throw std::domain_error("division by zero in FpBig");
    return r;
  }
  bool divides(const Elem& a, const Elem&) const { return !is_zero(a); }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  static Elem scalar_gcd(const Elem& a, const Elem& b) {
    return (is_zero(a) && is_zero(b)) ? Elem(0) : Elem(1);
  }
  bool operator==(const FpBig& o) const { return p == o.p; }
};

}  // namespace redcert

#endif
