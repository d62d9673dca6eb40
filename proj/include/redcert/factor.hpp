#ifndef REDCERT_FACTOR_HPP
#define REDCERT_FACTOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace redcert {

/// Deterministic Miller-Rabin with the first seven prime bases for
/// n < 3.3e14; GMP's probabilistic test beyond that.
bool is_prime(const mpz_class& n);
bool is_prime_u64(std::uint64_t n);

/// Ascending primes in [2, limit].
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Full factorization of |n|, n != 0: prime -> multiplicity.  Small factors
/// by trial division, the rest by Brent-cycle Pollard rho on mpz.
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

/// Distinct prime divisors of |n| in ascending order; n != 0.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

}  // namespace redcert

#endif
