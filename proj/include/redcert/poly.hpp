#ifndef REDCERT_POLY_HPP
#define REDCERT_POLY_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redcert/monomial.hpp"
#include "redcert/rings.hpp"

namespace redcert {

/// Sparse multivariate polynomial over a coefficient ring policy R.
/// Terms are kept in ascending graded-lex order with nonzero coefficients;
/// values are immutable in spirit: every operation builds a fresh canonical
/// polynomial, so instances can be shared freely across threads.
template <class R>
class Poly {
 public:
  using Ring = R;
  using Elem = typename R::Elem;

  struct Term {
    Monomial mon;
    Elem coeff;
  };

  Poly() : Poly(1, R()) {}

  explicit Poly(int nvars, R ring = R()) : ring_(std::move(ring)), nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("Poly: nvars must be in [1, " + std::to_string(kMaxVars) + "]");
  }

  static Poly zero(int nvars, R ring = R()) { return Poly(nvars, std::move(ring)); }

  static Poly constant(int nvars, Elem c, R ring = R()) {
    Poly p(nvars, std::move(ring));
    if (!p.ring_.is_zero(c)) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
  }

  static Poly monomial(int nvars, Monomial m, Elem c, R ring = R()) {
    Poly p(nvars, std::move(ring));
    p.check_mon(m);
    if (!p.ring_.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  static Poly variable(int nvars, int i, R ring = R()) {
    return monomial(nvars, Monomial::var(i), R::one(), std::move(ring));
  }

  /// Builds from arbitrary (monomial, coefficient) pairs, combining duplicates.
  static Poly from_terms(int nvars, const std::vector<std::pair<Monomial, Elem>>& ts,
                         R ring = R()) {
    Poly p(nvars, ring);
    std::map<Monomial, Elem, GrlexLess> acc;
    for (const auto& [m, c] : ts) {
      p.check_mon(m);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, c);
      else
        it->second = p.ring_.add(it->second, c);
    }
    p.take_from_map(std::move(acc));
    return p;
  }

  int nvars() const { return nvars_; }
  const R& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.back();
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
  }

  Elem constant_value() const {
    if (terms_.empty()) return R::zero();
    if (!is_constant()) throw std::domain_error("constant_value of nonconstant polynomial");
    return terms_[0].coeff;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  /// Largest total degree over the support; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, int(t.mon.total_degree()));
    return d;
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, int(t.mon.exp(var)));
    return terms_.empty() ? -1 : d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_[0].mon.total_degree();
    for (const auto& t : terms_)
      if (t.mon.total_degree() != d) return false;
    return true;
  }

  /// Highest variable index with positive degree, or -1 if constant.
  int top_variable() const {
    int v = -1;
    for (const auto& t : terms_)
      for (int i = nvars_ - 1; i > v; --i)
        if (t.mon.exp(i) > 0) v = std::max(v, i);
    return v;
  }

  Poly operator-() const {
    Poly r(nvars_, ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, ring_.neg(t.coeff)});
    return r;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }

  Poly operator*(const Poly& o) const {
    check_compat(o);
    Poly r(nvars_, ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    std::map<Monomial, Elem, GrlexLess> acc;
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        Monomial m = a.mon * b.mon;
        Elem c = ring_.mul(a.coeff, b.coeff);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, std::move(c));
        else
          it->second = ring_.add(it->second, c);
      }
    r.take_from_map(std::move(acc));
    return r;
  }

  Poly scaled(const Elem& c) const {
    Poly r(nvars_, ring_);
    if (ring_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Elem v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.mon, std::move(v)});
    }
    return r;
  }

  Poly mul_term(Monomial m, const Elem& c) const {
    Poly r(nvars_, ring_);
    if (ring_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Elem v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.mon * m, std::move(v)});
    }
    return r;
  }

  bool operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mon != o.terms_[i].mon || !(terms_[i].coeff == o.terms_[i].coeff))
        return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Formal partial derivative with respect to T_var.
  Poly derivative(int var) const {
    check_var(var);
    Poly r(nvars_, ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      unsigned e = t.mon.exp(var);
      if (e == 0) continue;
      Monomial m = t.mon;
      m.set_exp(var, e - 1);
      Elem c = mul_small(t.coeff, e);
      if (!ring_.is_zero(c)) r.terms_.push_back({m, std::move(c)});
    }
    // Dropping one exponent of a fixed variable preserves graded-lex order.
    return r;
  }

  /// Coefficient polynomials [t_0, ..., t_d] of *this viewed in T_var;
  /// t_d is nonzero and sum t_i * T_var^i reassembles the input.
  std::vector<Poly> coefficients_in(int var) const {
    check_var(var);
    if (terms_.empty()) throw std::domain_error("coefficients_in of zero polynomial");
    int d = degree_in(var);
    std::vector<Poly> out(std::size_t(d) + 1, Poly(nvars_, ring_));
    for (const auto& t : terms_) {
      unsigned e = t.mon.exp(var);
      Monomial m = t.mon;
      m.set_exp(var, 0);
      out[e].terms_.push_back({m, t.coeff});  // order within a slice is preserved
    }
    return out;
  }

  static Poly assemble(int var, const std::vector<Poly>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("assemble: empty coefficient list");
    Poly r(coeffs[0].nvars_, coeffs[0].ring_);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      Monomial m = Monomial::var(var, unsigned(e));
      r = r + coeffs[e].mul_term(m, R::one());
    }
    return r;
  }

  /// Substitutes T_var := 1 (e.g. dehomogenization).
  Poly subs_one(int var) const {
    check_var(var);
    std::map<Monomial, Elem, GrlexLess> acc;
    for (const auto& t : terms_) {
      Monomial m = t.mon;
      m.set_exp(var, 0);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, t.coeff);
      else
        it->second = ring_.add(it->second, t.coeff);
    }
    Poly r(nvars_, ring_);
    r.take_from_map(std::move(acc));
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(nvars_, R::one(), ring_);
    Poly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  /// Exact division: on success q satisfies *this == g * q.
  static bool try_divide(const Poly& f, const Poly& g, Poly& q) {
    f.check_compat(g);
    if (g.is_zero()) return false;
    Poly r = f;
    q = Poly(f.nvars_, f.ring_);
    const Term& lg = g.terms_.back();
    while (!r.is_zero()) {
      const Term& lr = r.terms_.back();
      if (!lg.mon.divides(lr.mon) || !f.ring_.divides(lg.coeff, lr.coeff)) return false;
      Monomial qm = lr.mon.divide(lg.mon);
      Elem qc = f.ring_.div(lr.coeff, lg.coeff);
      q.terms_.push_back({qm, qc});
      r = r - g.mul_term(qm, qc);
    }
    std::reverse(q.terms_.begin(), q.terms_.end());
    return true;
  }

  static Poly divide_exact(const Poly& f, const Poly& g) {
    Poly q(f.nvars_, f.ring_);
    if (!try_divide(f, g, q)) throw std::domain_error("divide_exact: inexact division");
    return q;
  }

 private:
  R ring_;
  int nvars_;
  std::vector<Term> terms_;

  void check_mon(Monomial m) const {
    for (int i = nvars_; i < kMaxVars; ++i)
      if (m.exp(i) != 0) throw std::invalid_argument("monomial uses variable beyond nvars");
  }
  void check_var(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
  }
  void check_compat(const Poly& o) const {
    if (nvars_ != o.nvars_ || !(ring_ == o.ring_))
      throw std::invalid_argument("polynomial operands have mismatched ring/nvars");
  }

  Elem mul_small(const Elem& c, unsigned k) const {
    Elem r = R::zero();
    Elem base = c;
    // k <= 127, so schoolbook doubling is plenty.
    while (k) {
      if (k & 1) r = ring_.add(r, base);
      if (k >>= 1) base = ring_.add(base, base);
    }
    return r;
  }

  Poly merged(const Poly& o, bool subtract) const {
    check_compat(o);
    Poly r(nvars_, ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    GrlexLess less;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && less(terms_[i].mon, o.terms_[j].mon))) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || less(o.terms_[j].mon, terms_[i].mon)) {
        const Term& t = o.terms_[j++];
        r.terms_.push_back({t.mon, subtract ? ring_.neg(t.coeff) : t.coeff});
      } else {
        Elem c = subtract ? ring_.sub(terms_[i].coeff, o.terms_[j].coeff)
                          : ring_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!ring_.is_zero(c)) r.terms_.push_back({terms_[i].mon, std::move(c)});
        ++i, ++j;
      }
    }
    return r;
  }

  void take_from_map(std::map<Monomial, Elem, GrlexLess>&& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!ring_.is_zero(c)) terms_.push_back({m, std::move(c)});
  }
};

using QPoly = Poly<QQ>;
using ZPoly = Poly<ZZ>;
using FpPoly = Poly<Fp>;
using FpBigPoly = Poly<FpBig>;

// ---------------------------------------------------------------------------
// Content, primitive parts, conversions.

/// gcd of the integer coefficients, as a nonnegative value (0 iff f = 0).
inline mpz_class int_content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// f = scale * prim with prim integer, content 1, positive graded-lex leading
/// coefficient.  This is saturation over ZZ.
struct ScaledPrimitive {
  mpq_class scale;
  ZPoly prim;
};

ScaledPrimitive content_primitive(const QPoly& f);

/// Primitive part with positive leading coefficient; throws on zero input.
ZPoly primitive_part(const ZPoly& f);

QPoly to_rational(const ZPoly& f);
ZPoly to_integer(const QPoly& f);  // requires all denominators 1

// ---------------------------------------------------------------------------
// Pseudo-division and gcd.

/// Pseudo-remainder of f by g in T_var: lc_g^(deg f - deg g + 1) * f mod g.
/// Requires deg_var(f) >= deg_var(g) >= 0 and g nonzero in T_var sense.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& f, const Poly<R>& g, int var) {
  int df = f.degree_in(var), dg = g.degree_in(var);
  if (g.is_zero() || df < dg) throw std::invalid_argument("pseudo_rem: bad degrees");
  auto gc = g.coefficients_in(var);
  Poly<R> lcg = gc.back();
  Poly<R> r = f;
  int steps = df - dg + 1;
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    auto rc = r.coefficients_in(var);
    int dr = int(rc.size()) - 1;
    Poly<R> lead = rc.back();
    // r <- lc_g * r - lead * T_var^(dr-dg) * g
    r = lcg * r - (lead * g).mul_term(Monomial::var(var, unsigned(dr - dg)), R::one());
    --steps;
  }
  for (; steps > 0; --steps) r = lcg * r;
  return r;
}

namespace detail {

/// Unit-normalizes: over ZZ makes the graded-lex leading coefficient
/// positive; over a field makes it 1.
template <class R>
Poly<R> normalize_unit(const Poly<R>& f) {
  if (f.is_zero()) return f;
  const auto& lc = f.leading_term().coeff;
  if constexpr (R::is_field) {
    return f.scaled(f.ring().div(R::one(), lc));
  } else {
    if (sgn(lc) < 0) return -f;
    return f;
  }
}

template <class R>
Poly<R> poly_gcd_impl(const Poly<R>& f, const Poly<R>& g);

/// gcd of the coefficient polynomials of f in T_var (the content of f seen
/// univariately in T_var).
template <class R>
Poly<R> content_in(const Poly<R>& f, int var) {
  auto cs = f.coefficients_in(var);
  Poly<R> c(f.nvars(), f.ring());
  for (const auto& ci : cs) {
    if (ci.is_zero()) continue;
    c = c.is_zero() ? ci : poly_gcd_impl(c, ci);
    if (c.is_constant()) {
      if constexpr (R::is_field) break;
      else if (c.constant_value() == 1) break;
    }
  }
  return normalize_unit(c);
}

template <class R>
Poly<R> poly_gcd_impl(const Poly<R>& f, const Poly<R>& g) {
  using P = Poly<R>;
  if (f.is_zero()) return normalize_unit(g);
  if (g.is_zero()) return normalize_unit(f);
  if (f.is_constant() || g.is_constant()) {
    if constexpr (R::is_field) {
      return P::constant(f.nvars(), R::one(), f.ring());
    } else {
      mpz_class a = int_content(f);
      mpz_class b = int_content(g);
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return P::constant(f.nvars(), d, f.ring());
    }
  }

  int var = std::max(f.top_variable(), g.top_variable());

  P cf = content_in(f, var);
  P cg = content_in(g, var);
  P c = poly_gcd_impl(cf, cg);
  P a = P::divide_exact(f, cf);
  P b = P::divide_exact(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

  // Subresultant PRS (Geddes-Czapor-Labahn Algorithm 7.3); all divisions
  // below are exact in R[T...].
  P one = P::constant(f.nvars(), R::one(), f.ring());
  P gg = one, h = one;
  while (true) {
    int delta = a.degree_in(var) - b.degree_in(var);
    P r = pseudo_rem(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return normalize_unit(c);
    P denom = gg * h.pow(unsigned(delta));
    a = b;
    b = P::divide_exact(r, denom);
    gg = a.coefficients_in(var).back();
    if (delta == 1)
      h = gg;
    else if (delta > 1)
      h = P::divide_exact(gg.pow(unsigned(delta)), h.pow(unsigned(delta - 1)));
  }
  P pp = P::divide_exact(b, content_in(b, var));
  return normalize_unit(c * pp);
}

}  // namespace detail

/// Multivariate gcd by recursive subresultant PRS with content recursion.
/// Over ZZ the result is primitive with positive leading coefficient; over a
/// prime field it is monic under graded-lex.
template <class R>
Poly<R> poly_gcd(const Poly<R>& f, const Poly<R>& g) {
  return detail::poly_gcd_impl(f, g);
}

/// gcd over QQ[T...], returned as a primitive integer polynomial.
ZPoly gcd_rational(const QPoly& f, const QPoly& g);

/// True iff f (nonzero) has no repeated irreducible factor over QQ.
bool is_squarefree_q(const QPoly& f);

// ---------------------------------------------------------------------------
// Parsing and printing.

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Parses the expression grammar: terms joined by '+'/'-'; a term is an
/// optional rational coefficient (a or a/b), '*', and a product of Tk or
/// Tk^e factors.  Whitespace is insignificant.  Variables are T0..T{nvars-1}.
QPoly parse_poly(const std::string& text, int nvars);

std::string to_string(const QPoly& f, const std::string& var_prefix = "T");
std::string to_string(const ZPoly& f, const std::string& var_prefix = "T");
std::string to_string(const FpPoly& f, const std::string& var_prefix = "T");

}  // namespace redcert

#endif
