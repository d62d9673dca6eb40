#include "redcert/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace redcert {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return std::uint64_t((unsigned __int128)(a)*b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull})
    if (n % p == 0) return n == p;
  // {2,3,5,7,11,13,17} is a deterministic base set below 3.3e14.
  if (n < 330000000000000ull) {
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull})
      if (!miller_rabin_u64(n, a)) return false;
    return true;
  }
  for (std::uint64_t a :
       {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin_u64(n, a)) return false;
  return true;  // deterministic for all 64-bit n with these 12 bases
}

bool is_prime(const mpz_class& n) {
  if (sgn(n) <= 0) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> sieve(std::size_t(limit) + 1, true);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!sieve[std::size_t(i)]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) sieve[std::size_t(j)] = false;
  }
  return out;
}

namespace {

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> table = primes_up_to(100000);
  return table;
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of an odd
/// composite n.  The parameter sequence is fixed, so runs are reproducible.
mpz_class rho_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2 + (c % 7), g = 1, q = 1, x, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {  // batch overshoot: redo the last block one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        mpz_class d = abs(x - ys);
        if (sgn(d) == 0) break;  // degenerate cycle, try the next c
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n && g != 1) return g;
  }
}

void factor_rec(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = rho_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
  if (sgn(n) == 0) throw std::invalid_argument("factorize(0)");
  mpz_class m = abs(n);
  std::map<mpz_class, unsigned> out;
  for (std::uint64_t p : small_primes()) {
    if (m == 1 || mpz_cmp_ui(m.get_mpz_t(), (unsigned long)(p * p)) < 0) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[mpz_class((unsigned long)p)];
    }
  }
  if (m > 1) factor_rec(m, out);
  return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

}  // namespace redcert
