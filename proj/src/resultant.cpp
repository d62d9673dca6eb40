#include "redcert/resultant.hpp"

#include <stdexcept>

namespace redcert {

namespace {

/// Pivot preference: fewest terms, then smaller graded-lex leading monomial.
bool better_pivot(const ZPoly& a, const ZPoly& b) {
  if (a.num_terms() != b.num_terms()) return a.num_terms() < b.num_terms();
  return grlex_less(a.leading_term().mon, b.leading_term().mon);
}

}  // namespace

ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m) {
  const std::size_t k = m.size();
  if (k == 0) throw std::invalid_argument("bareiss_determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("bareiss_determinant: not square");

  const int nvars = m[0][0].nvars();
  ZPoly prev = ZPoly::constant(nvars, 1);
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = k;
    for (std::size_t r = c; r < k; ++r) {
      if (m[r][c].is_zero()) continue;
      if (piv == k || better_pivot(m[r][c], m[piv][c])) piv = r;
    }
    if (piv == k) return ZPoly::zero(nvars);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < k; ++r) {
      for (std::size_t j = c + 1; j < k; ++j)
        m[r][j] = ZPoly::divide_exact(m[c][c] * m[r][j] - m[r][c] * m[c][j], prev);
      m[r][c] = ZPoly::zero(nvars);
    }
    prev = m[c][c];
  }
  ZPoly det = m[k - 1][k - 1];
  return sign < 0 ? -det : det;
}

ResultantValue sylvester_resultant(const ZPoly& f, const ZPoly& g, int var, int m, int n) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester_resultant: zero polynomial");
  const int df = f.degree_in(var), dg = g.degree_in(var);
  if (m < df || n < dg)
    throw std::invalid_argument("sylvester_resultant: declared degree below true degree");
  if (m == 0 && n == 0)
    throw std::invalid_argument("sylvester_resultant: (0,0) bounds give an empty matrix");

  const int nvars = f.nvars();
  auto pad = [&](const ZPoly& p, int bound) {
    std::vector<ZPoly> cs = p.coefficients_in(var);
    cs.resize(std::size_t(bound) + 1, ZPoly::zero(nvars));
    return cs;
  };
  std::vector<ZPoly> fc = pad(f, m);  // [t_0 .. t_m]
  std::vector<ZPoly> gc = pad(g, n);  // [s_0 .. s_n]

  const std::size_t size = std::size_t(m + n);
  std::vector<std::vector<ZPoly>> mat(size, std::vector<ZPoly>(size, ZPoly::zero(nvars)));
  for (int r = 0; r < n; ++r)  // n rows of [t_m .. t_0], shifted
    for (int j = 0; j <= m; ++j) mat[std::size_t(r)][std::size_t(r + j)] = fc[std::size_t(m - j)];
  for (int r = 0; r < m; ++r)  // m rows of [s_n .. s_0], shifted
    for (int j = 0; j <= n; ++j)
      mat[std::size_t(n + r)][std::size_t(r + j)] = gc[std::size_t(n - j)];

  ResultantValue out;
  out.det = bareiss_determinant(std::move(mat));
  out.content = int_content(out.det);
  out.is_zero_ideal = out.det.is_zero();
  return out;
}

ResultantValue sylvester_resultant(const QPoly& f, const QPoly& g, int var, int m, int n) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester_resultant: zero polynomial");
  return sylvester_resultant(content_primitive(f).prim, content_primitive(g).prim, var, m, n);
}

bool resultant_is_zero(const QPoly& f, const QPoly& g, int var) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant_is_zero: zero polynomial");
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (m == 0 && n == 0)
    throw std::invalid_argument("resultant_is_zero: T_var absent from both inputs");
  return sylvester_resultant(f, g, var, m, n).is_zero_ideal;
}

ResultantValue derivation_resultant(const ZPoly& f_primitive, int var) {
  const int d = f_primitive.degree_in(var);
  if (d < 1) throw std::invalid_argument("derivation_resultant: degree 0 in T_var");
  ZPoly df = f_primitive.derivative(var);
  return sylvester_resultant(f_primitive, df, var, d, d - 1);
}

ResultantValue derivation_resultant(const QPoly& f, int var) {
  if (f.is_zero()) throw std::invalid_argument("derivation_resultant: zero polynomial");
  return derivation_resultant(content_primitive(f).prim, var);
}

}  // namespace redcert
