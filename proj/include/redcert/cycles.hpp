#ifndef REDCERT_CYCLES_HPP
#define REDCERT_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redcert/poly.hpp"
#include "redcert/real.hpp"

namespace redcert {

/// A rational projective point with canonical primitive integer coordinates
/// (gcd 1, first nonzero entry positive).
struct ProjPoint {
  std::vector<mpz_class> coords;

  static ProjPoint of(std::vector<mpz_class> raw);
  int ambient_n() const { return int(coords.size()) - 1; }
  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
};

/// A 0-dimensional cycle: distinct projective points with positive integer
/// multiplicities.  The degree is the sum of multiplicities.
struct PointCycle {
  int ambient_n = 1;
  std::vector<std::pair<ProjPoint, unsigned>> points;

  unsigned degree() const;
  bool reduced() const;  // all multiplicities 1
  void validate() const;
};

/// Cycle file format: one point per line, `[a0 : a1 : ... : an] * m`,
/// with integer entries; `* m` is optional (default multiplicity 1).
PointCycle parse_cycle(const std::string& text);

/// The Cayley form of the cycle: prod_i (sum_j p_ij u_j)^(m_i), a primitive
/// integer form of degree deg(cycle) in the n+1 dual variables.
ZPoly cayley_form(const PointCycle& c);

/// Bad primes through the Cayley route: p <= p_max where the Cayley form
/// acquires a square factor mod p.  Requires a reduced cycle.
std::vector<std::uint64_t> cycle_bad_primes(const PointCycle& c, std::uint64_t p_max);

/// Independent oracle: p is bad iff two points become proportional mod p,
/// i.e. p divides the gcd of the 2x2 minors of some pair.  This enumerates
/// the full (finite) bad set with no scan bound.
std::vector<mpz_class> collision_bad_primes(const PointCycle& c);

/// sum_i m_i log ||p_i||_2 on primitive coordinates: the l2-metric Arakelov
/// height of the 0-cycle, additive over points.
double cycle_height(const PointCycle& c);
Real cycle_height_real(const PointCycle& c, mpfr_prec_t prec = 128);

struct CycleReport {
  unsigned n = 1;       // ambient P^n
  unsigned delta = 1;   // cycle degree
  bool reduced = true;
  ZPoly cayley;
  double height = 0;
  // bad-prime analysis (reduced cycles only)
  std::vector<mpz_class> bad_primes;       // exact, via pairwise collisions
  std::vector<std::uint64_t> cayley_bad;   // Cayley route over [2, scan_max]
  std::uint64_t scan_max = 0;
  bool routes_agree = false;
  double bound_log = 0;     // pure_dim_bound_log(n, 0, delta, 1, height)
  double count_bound = 0;   // at N0 = 2
  double product_log = 0;
  bool product_le_bound = false;
  bool count_le_bound = false;
  bool pass() const { return routes_agree && product_le_bound && count_le_bound; }
};

/// Assembles the d = 0 verdict: both bad-prime routes, the pure-dimension
/// bound with N = n, and the count bound at N0 = 2.
CycleReport cycle_report(const PointCycle& c,
                         std::optional<std::uint64_t> scan_override = std::nullopt,
                         mpfr_prec_t prec = 128);

}  // namespace redcert

#endif
