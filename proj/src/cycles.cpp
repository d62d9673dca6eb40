#include "redcert/cycles.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "redcert/bounds.hpp"
#include "redcert/factor.hpp"
#include "redcert/modp.hpp"

namespace redcert {

ProjPoint ProjPoint::of(std::vector<mpz_class> raw) {
  if (raw.empty() || raw.size() > std::size_t(kMaxVars))
    throw std::invalid_argument("ProjPoint: dimension out of range");
  mpz_class g = 0;
  for (const auto& c : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw std::invalid_argument("ProjPoint: zero vector");
  for (auto& c : raw) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  for (const auto& c : raw) {
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0)
      for (auto& x : raw) x = -x;
    break;
  }
  return ProjPoint{std::move(raw)};
}

unsigned PointCycle::degree() const {
  unsigned d = 0;
  for (const auto& [p, m] : points) d += m;
  return d;
}

bool PointCycle::reduced() const {
  for (const auto& [p, m] : points)
    if (m != 1) return false;
  return true;
}

void PointCycle::validate() const {
  if (points.empty()) throw std::invalid_argument("PointCycle: empty cycle");
  if (ambient_n < 1 || ambient_n + 1 > kMaxVars)
    throw std::invalid_argument("PointCycle: ambient dimension out of range");
  for (const auto& [p, m] : points) {
    if (p.ambient_n() != ambient_n)
      throw std::invalid_argument("PointCycle: mixed ambient dimensions");
    if (m < 1) throw std::invalid_argument("PointCycle: multiplicity < 1");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("PointCycle: duplicate point");
}

PointCycle parse_cycle(const std::string& text) {
  PointCycle c;
  c.points.clear();
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("cycle line " + std::to_string(lineno) + ": " + msg);
    };
    if (s.front() != '[') fail("expected '['");
    auto close = s.find(']');
    if (close == std::string::npos) fail("missing ']'");
    std::vector<mpz_class> coords;
    std::string body = s.substr(1, close - 1);
    std::size_t pos = 0;
    for (;;) {
      auto colon = body.find(':', pos);
      std::string entry = body.substr(
          pos, colon == std::string::npos ? std::string::npos : colon - pos);
      if (entry.empty()) fail("empty coordinate");
      try {
        coords.emplace_back(entry);
      } catch (const std::invalid_argument&) {
        fail("bad integer '" + entry + "'");
      }
      if (colon == std::string::npos) break;
      pos = colon + 1;
    }
    unsigned mult = 1;
    std::string rest = s.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '*') fail("expected '*' before multiplicity");
      try {
        long m = std::stol(rest.substr(1));
        if (m < 1) fail("multiplicity < 1");
        mult = unsigned(m);
      } catch (const std::invalid_argument&) {
        fail("bad multiplicity '" + rest.substr(1) + "'");
      }
    }
    ProjPoint p = ProjPoint::of(std::move(coords));
    if (c.points.empty()) c.ambient_n = p.ambient_n();
    c.points.emplace_back(std::move(p), mult);
  }
  c.validate();
  return c;
}

ZPoly cayley_form(const PointCycle& c) {
  c.validate();
  const int nv = c.ambient_n + 1;
  ZPoly psi = ZPoly::constant(nv, 1);
  for (const auto& [p, m] : c.points) {
    std::vector<std::pair<Monomial, mpz_class>> ts;
    for (int j = 0; j < nv; ++j)
      if (sgn(p.coords[std::size_t(j)]) != 0)
        ts.emplace_back(Monomial::var(j), p.coords[std::size_t(j)]);
    ZPoly lin = ZPoly::from_terms(nv, ts);
    psi = psi * lin.pow(m);
  }
  return psi;  // primitive by Gauss's lemma: every factor is primitive
}

std::vector<std::uint64_t> cycle_bad_primes(const PointCycle& c, std::uint64_t p_max) {
  if (!c.reduced())
    throw std::invalid_argument("cycle_bad_primes: cycle is not reduced");
  ZPoly psi = cayley_form(c);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t p : primes_up_to(p_max))
    if (!squarefree_mod_p(reduce_mod_p(psi, p))) bad.push_back(p);
  return bad;
}

std::vector<mpz_class> collision_bad_primes(const PointCycle& c) {
  if (!c.reduced())
    throw std::invalid_argument("collision_bad_primes: cycle is not reduced");
  c.validate();
  const std::size_t k = c.points.size();
  std::set<mpz_class> bad;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& a = c.points[i].first.coords;
      const auto& b = c.points[j].first.coords;
      mpz_class g = 0;
      for (std::size_t s = 0; s < a.size() && g != 1; ++s)
        for (std::size_t t = s + 1; t < a.size() && g != 1; ++t) {
          mpz_class minor = a[s] * b[t] - a[t] * b[s];
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
        }
      // distinct projective points leave some minor nonzero
      if (g > 1)
        for (const auto& p : prime_divisors(g)) bad.insert(p);
    }
  return {bad.begin(), bad.end()};
}

Real cycle_height_real(const PointCycle& c, mpfr_prec_t prec) {
  c.validate();
  Real h(prec);
  for (const auto& [p, m] : c.points) {
    mpz_class norm2 = 0;
    for (const auto& x : p.coords) norm2 += x * x;
    h = h + Real::of(long(m), prec) * log_mpz(norm2, prec) / Real::of(2L, prec);
  }
  return h;
}

double cycle_height(const PointCycle& c) { return cycle_height_real(c).to_double(); }

CycleReport cycle_report(const PointCycle& c, std::optional<std::uint64_t> scan_override,
                         mpfr_prec_t prec) {
  c.validate();
  CycleReport rpt;
  rpt.n = unsigned(c.ambient_n);
  rpt.delta = c.degree();
  rpt.reduced = c.reduced();
  rpt.cayley = cayley_form(c);
  Real h = cycle_height_real(c, prec);
  rpt.height = h.to_double();
  if (!rpt.reduced) return rpt;

  rpt.bad_primes = collision_bad_primes(c);
  std::uint64_t scan = 97;
  for (const auto& p : rpt.bad_primes)
    if (p.fits_ulong_p()) scan = std::max(scan, std::uint64_t(p.get_ui()) + 30);
  scan = std::min<std::uint64_t>(scan, 1000000);
  if (scan_override) scan = *scan_override;
  rpt.scan_max = scan;
  rpt.cayley_bad = cycle_bad_primes(c, scan);

  std::vector<std::uint64_t> pairwise_in_range;
  for (const auto& p : rpt.bad_primes)
    if (p.fits_ulong_p() && p.get_ui() <= scan) pairwise_in_range.push_back(p.get_ui());
  rpt.routes_agree = pairwise_in_range == rpt.cayley_bad;

  Real bound = pure_dim_bound_log(rpt.n, 0, rpt.delta, 1, h, prec);
  rpt.bound_log = bound.to_double();
  rpt.count_bound = pure_dim_count_bound(rpt.n, 0, rpt.delta, 1, h, 2.0, prec).to_double();
  Real product_log(prec);
  for (const auto& p : rpt.bad_primes) product_log = product_log + log_mpz(p, prec);
  rpt.product_log = product_log.to_double();
  rpt.product_le_bound = product_log <= bound;
  rpt.count_le_bound = double(rpt.bad_primes.size()) <= rpt.count_bound + 1e-12;
  return rpt;
}

}  // namespace redcert
