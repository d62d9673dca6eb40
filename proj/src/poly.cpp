#include "redcert/poly.hpp"

#include <cctype>
#include <sstream>

namespace redcert {

ScaledPrimitive content_primitive(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("content_primitive: zero polynomial");
  // scale = gcd(numerators) / lcm(denominators), sign fixed so that the
  // primitive part has a positive graded-lex leading coefficient.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  mpq_class scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (sgn(f.leading_term().coeff) < 0) scale = -scale;

  ZPoly prim(f.nvars());
  std::vector<std::pair<Monomial, mpz_class>> ts;
  ts.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    mpq_class c = t.coeff / scale;
    if (c.get_den() != 1) throw std::logic_error("content_primitive: scale not exact");
    ts.emplace_back(t.mon, c.get_num());
  }
  prim = ZPoly::from_terms(f.nvars(), ts);
  return {scale, prim};
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) throw std::domain_error("primitive_part: zero polynomial");
  mpz_class c = int_content(f);
  if (sgn(f.leading_term().coeff) < 0) c = -c;
  if (c == 1) return f;
  ZPoly q(f.nvars());
  if (!ZPoly::try_divide(f, ZPoly::constant(f.nvars(), c), q))
    throw std::logic_error("primitive_part: content does not divide");
  return q;
}

QPoly to_rational(const ZPoly& f) {
  std::vector<std::pair<Monomial, mpq_class>> ts;
  ts.reserve(f.num_terms());
  for (const auto& t : f.terms()) ts.emplace_back(t.mon, mpq_class(t.coeff));
  return QPoly::from_terms(f.nvars(), ts);
}

ZPoly to_integer(const QPoly& f) {
  std::vector<std::pair<Monomial, mpz_class>> ts;
  ts.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    if (t.coeff.get_den() != 1)
      throw std::invalid_argument("to_integer: coefficient is not an integer");
    ts.emplace_back(t.mon, t.coeff.get_num());
  }
  return ZPoly::from_terms(f.nvars(), ts);
}

ZPoly gcd_rational(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("gcd_rational: zero polynomial");
  return poly_gcd(content_primitive(f).prim, content_primitive(g).prim);
}

bool is_squarefree_q(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_squarefree_q: zero polynomial");
  if (f.is_constant()) return true;
  ZPoly p = content_primitive(f).prim;
  ZPoly acc = p;
  for (int v = 0; v < f.nvars(); ++v) {
    if (p.degree_in(v) <= 0) continue;
    acc = poly_gcd(acc, p.derivative(v));
    if (acc.is_constant()) return true;
  }
  return acc.is_constant();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }
};

mpz_class parse_integer(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected a digit");
  return mpz_class(c.s.substr(start, c.i - start));
}

unsigned parse_exponent(Cursor& c) {
  mpz_class e = parse_integer(c);
  if (e > kMaxExp) throw ParseError("exponent too large", c.i);
  return unsigned(e.get_ui());
}

int parse_var_index(Cursor& c, int nvars) {
  ++c.i;  // past 'T'
  if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    c.fail("expected a variable index after 'T'");
  mpz_class k = parse_integer(c);
  if (k >= nvars) throw ParseError("variable index out of range", c.i);
  return int(k.get_ui());
}

}  // namespace

QPoly parse_poly(const std::string& text, int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("parse_poly: nvars out of range");
  Cursor c{text};
  std::vector<std::pair<Monomial, mpq_class>> terms;

  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    if (c.done()) c.fail("dangling sign");

    mpq_class coeff(sign);
    bool saw_number = false, saw_monomial = false;
    ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num = parse_integer(c);
      mpz_class den = 1;
      if (c.peek() == '/') {
        ++c.i;
        den = parse_integer(c);
        if (den == 0) c.fail("zero denominator");
      }
      coeff *= mpq_class(num, den);
      coeff.canonicalize();
      saw_number = true;
    }

    Monomial mon = Monomial::one();
    bool expect_factor = false;
    while (true) {
      c.skip_ws();
      char p = c.peek();
      if (p == '*') {
        if (expect_factor) c.fail("expected a factor after '*'");
        ++c.i;
        expect_factor = true;
        continue;
      }
      if (p == 'T') {
        int v = parse_var_index(c, nvars);
        unsigned e = 1;
        if (c.peek() == '^') {
          ++c.i;
          e = parse_exponent(c);
        }
        unsigned cur = mon.exp(v);
        if (cur + e > kMaxExp) throw ParseError("exponent too large", c.i);
        mon.set_exp(v, cur + e);
        saw_monomial = true;
        expect_factor = false;
        continue;
      }
      if (p == '/' && saw_monomial) {  // trailing divisor, e.g. "T1^2/3"
        ++c.i;
        mpz_class den = parse_integer(c);
        if (den == 0) c.fail("zero denominator");
        coeff /= mpq_class(den);
        continue;
      }
      if (expect_factor) c.fail("expected a factor after '*'");
      break;
    }

    if (!saw_number && !saw_monomial) c.fail("expected a term");
    terms.emplace_back(mon, coeff);
    first = false;
  }
  if (first) throw ParseError("empty polynomial expression", 0);
  return QPoly::from_terms(nvars, terms);
}

namespace {

template <class P, class CoeffToStr>
std::string poly_to_string(const P& f, const std::string& var_prefix, CoeffToStr cts) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  const auto& ts = f.terms();
  for (std::size_t k = ts.size(); k-- > 0;) {
    const auto& t = ts[k];
    std::string cs = cts(t.coeff);
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (k + 1 == ts.size())
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    bool has_mon = !t.mon.is_one();
    if (!has_mon || mag != "1") {
      out << mag;
      if (has_mon) out << "*";
    }
    if (has_mon) {
      bool first_var = true;
      for (int v = 0; v < f.nvars(); ++v) {
        unsigned e = t.mon.exp(v);
        if (e == 0) continue;
        if (!first_var) out << "*";
        out << var_prefix << v;
        if (e > 1) out << "^" << e;
        first_var = false;
      }
    }
  }
  return out.str();
}

}  // namespace

std::string to_string(const QPoly& f, const std::string& var_prefix) {
  return poly_to_string(f, var_prefix, [](const mpq_class& c) { return c.get_str(); });
}

std::string to_string(const ZPoly& f, const std::string& var_prefix) {
  return poly_to_string(f, var_prefix, [](const mpz_class& c) { return c.get_str(); });
}

std::string to_string(const FpPoly& f, const std::string& var_prefix) {
  return poly_to_string(f, var_prefix,
                        [](std::uint64_t c) { return std::to_string(c); });
}

}  // namespace redcert
