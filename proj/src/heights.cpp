#include "redcert/heights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "redcert/parallel.hpp"
#include "redcert/real.hpp"
#include "redcert/rng.hpp"

namespace redcert {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

struct TermD {
  double c;
  std::array<unsigned, kMaxVars> e;
};

std::vector<TermD> to_double_terms(const QPoly& f) {
  std::vector<TermD> out;
  out.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    TermD td;
    td.c = t.coeff.get_d();
    for (int v = 0; v < kMaxVars; ++v) td.e[std::size_t(v)] = t.mon.exp(v);
    out.push_back(td);
  }
  return out;
}

std::vector<int> effective_vars(const QPoly& f) {
  std::vector<int> vs;
  for (int v = 0; v < f.nvars(); ++v)
    if (f.degree_in(v) >= 1) vs.push_back(v);
  return vs;
}

/// |f| at a point of the k-torus given by angles in [0,1) per effective var.
struct TorusEvaluator {
  std::vector<TermD> terms;      // exponents re-indexed to 0..k-1
  std::vector<unsigned> maxdeg;  // per effective var
  double l2 = 0;

  TorusEvaluator(const QPoly& f, const std::vector<int>& vars) {
    auto raw = to_double_terms(f);
    terms.reserve(raw.size());
    maxdeg.assign(vars.size(), 0);
    double s = 0;
    for (const auto& t : raw) {
      TermD td;
      td.c = t.c;
      td.e.fill(0);
      for (std::size_t j = 0; j < vars.size(); ++j) {
        td.e[j] = t.e[std::size_t(vars[j])];
        maxdeg[j] = std::max(maxdeg[j], td.e[j]);
      }
      terms.push_back(td);
      s += t.c * t.c;
    }
    l2 = std::sqrt(s);
  }

  double abs_at(const double* angles) const {
    std::array<std::array<std::complex<double>, kMaxExp + 1>, 4> pw;
    for (std::size_t j = 0; j < maxdeg.size(); ++j) {
      std::complex<double> z = std::polar(1.0, kTau * angles[j]);
      pw[j][0] = 1.0;
      for (unsigned e = 1; e <= maxdeg[j]; ++e) pw[j][e] = pw[j][e - 1] * z;
    }
    std::complex<double> acc = 0.0;
    for (const auto& t : terms) {
      std::complex<double> v = t.c;
      for (std::size_t j = 0; j < maxdeg.size(); ++j)
        if (t.e[j]) v *= pw[j][t.e[j]];
      acc += v;
    }
    return std::abs(acc);
  }
};

mpq_class abs_q(const mpq_class& q) { return q >= 0 ? q : mpq_class(-q); }

Estimate exact_estimate(double v) { return Estimate{v, 0.0, true}; }

double log_of_abs_q(const mpq_class& q) {
  return log(Real::of(abs_q(q), 128)).to_double();
}

}  // namespace

mpz_class classical_height_witness(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("classical_height: zero polynomial");
  ZPoly prim = content_primitive(f).prim;
  mpz_class w = 0;
  for (const auto& t : prim.terms()) w = std::max(w, mpz_class(abs(t.coeff)));
  return w;
}

double classical_height(const QPoly& f) {
  return log(Real::of(classical_height_witness(f), 128)).to_double();
}

double l2_norm_log(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("l2_norm_log: zero polynomial");
  mpq_class s = 0;
  for (const auto& t : f.terms()) s += t.coeff * t.coeff;
  return 0.5 * log(Real::of(s, 128)).to_double();
}

Estimate mahler_jensen(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("mahler_jensen: zero polynomial");
  auto vars = effective_vars(f);
  if (vars.empty()) return exact_estimate(log_of_abs_q(f.constant_value()));
  if (vars.size() != 1)
    throw std::invalid_argument("mahler_jensen: input is not univariate");
  int v = vars[0];
  auto coeffs = f.coefficients_in(v);
  int d = int(coeffs.size()) - 1;
  std::vector<double> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c[i] = coeffs[i].is_zero() ? 0.0 : coeffs[i].constant_value().get_d();

  // roots at the origin contribute max(1, 0) = 1; strip them
  int low = 0;
  while (c[std::size_t(low)] == 0.0) ++low;
  int deg = d - low;
  double value = std::log(std::abs(c[std::size_t(d)]));
  if (deg >= 1) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i)
      companion(i, deg - 1) = -c[std::size_t(low + i)] / c[std::size_t(d)];
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    for (int i = 0; i < deg; ++i) {
      double r = std::abs(solver.eigenvalues()[i]);
      if (r > 1.0) value += std::log(r);
    }
  }
  return Estimate{value, 1e-11 * double(d + 1) * (1.0 + std::abs(value)), true};
}

Estimate mahler_torus_quadrature(const QPoly& f, const MahlerOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("mahler_torus_quadrature: zero polynomial");
  if (f.is_monomial())
    return exact_estimate(log_of_abs_q(f.leading_term().coeff));
  auto vars = effective_vars(f);
  const std::size_t k = vars.size();
  if (k > 4)
    throw std::invalid_argument("mahler_torus_quadrature: more than 4 effective variables");
  TorusEvaluator eval(f, vars);
  const double tiny = 1e-12 * eval.l2;

  // Midpoint tensor rule: power-of-two grids never hit low-order roots of
  // unity, and jittered resampling absorbs near-hits of other unimodular
  // roots (the singularities are Jensen-integrable).
  auto grid_mean = [&](std::uint64_t n) {
    long double acc = 0.0L;
    std::vector<std::uint64_t> idx(k, 0);
    double angles[4];
    const double phi_step = 0.6180339887498949 / double(n) / 64.0;
    for (;;) {
      for (std::size_t j = 0; j < k; ++j) angles[j] = (double(idx[j]) + 0.5) / double(n);
      double a = eval.abs_at(angles);
      for (int attempt = 1; a < tiny && attempt <= 8; ++attempt) {
        for (std::size_t j = 0; j < k; ++j)
          angles[j] = (double(idx[j]) + 0.5) / double(n) + phi_step * attempt;
        a = eval.abs_at(angles);
      }
      acc += std::log(std::max(a, 1e-300));
      std::size_t j = 0;
      while (j < k && ++idx[j] == n) idx[j++] = 0;
      if (j == k) break;
    }
    long double total = 1.0L;
    for (std::size_t j = 0; j < k; ++j) total *= (long double)n;
    return double(acc / total);
  };

  std::uint64_t n = (k == 1) ? 64 : (k == 2) ? 32 : 8;
  std::vector<double> ests, deltas;
  std::uint64_t spent = 0;
  for (;;) {
    std::uint64_t points = 1;
    for (std::size_t j = 0; j < k; ++j) points *= n;
    if (!ests.empty() && spent + points > opts.max_points) break;
    ests.push_back(grid_mean(n));
    spent += points;
    if (ests.size() >= 2) {
      deltas.push_back(std::abs(ests.back() - ests[ests.size() - 2]));
      if (deltas.back() <= opts.target) break;
    }
    n *= 2;
  }

  Estimate out;
  out.value = ests.back();
  if (deltas.empty()) {
    out.error = std::numeric_limits<double>::infinity();
    out.converged = false;
    return out;
  }
  double delta = deltas.back();
  // Aitken extrapolation once the refinement looks geometric
  if (deltas.size() >= 2 && deltas[deltas.size() - 2] > 0 && delta > 0) {
    double ratio = delta / deltas[deltas.size() - 2];
    if (ratio < 0.7) {
      double extrap = ests.back() + delta * ratio / (1.0 - ratio);
      out.value = extrap;
      out.error = std::abs(extrap - ests.back()) + delta * ratio + 1e-12;
      out.converged = true;
      return out;
    }
  }
  out.error = delta + 1e-12;
  bool shrinking = deltas.size() < 2 || delta < 0.75 * deltas[deltas.size() - 2];
  if (delta > opts.target && !shrinking) {
    out.error = std::numeric_limits<double>::infinity();
    out.converged = false;
  }
  return out;
}

Estimate mahler_measure_log(const QPoly& f, const MahlerOptions& opts, std::string* method) {
  if (f.is_zero()) throw std::invalid_argument("mahler_measure_log: zero polynomial");
  auto set_method = [&](const char* m) {
    if (method) *method = m;
  };
  QPoly g = f;
  if (g.is_homogeneous()) {
    auto vars = effective_vars(g);
    if (!vars.empty()) g = g.subs_one(vars.front());  // the measure is invariant
  }
  if (g.is_constant() || g.is_monomial()) {
    set_method("exact-monomial");
    return exact_estimate(log_of_abs_q(g.leading_term().coeff));
  }
  if (effective_vars(g).size() == 1) {
    set_method("jensen");
    return mahler_jensen(g);
  }
  set_method("torus-quadrature");
  return mahler_torus_quadrature(g, opts);
}

Estimate zero_norm_log(const QPoly& f, const ZeroNormOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("zero_norm_log: zero polynomial");
  if (!f.is_homogeneous())
    throw std::invalid_argument("zero_norm_log: input must be homogeneous");
  if (f.is_constant()) return exact_estimate(log_of_abs_q(f.constant_value()));
  if (f.nvars() == 1)  // P^0: |c T0^d| = |c| on the unit circle class
    return exact_estimate(log_of_abs_q(f.leading_term().coeff));

  const int nv = f.nvars();
  auto terms = to_double_terms(f);
  unsigned maxdeg[kMaxVars] = {0};
  for (const auto& t : terms)
    for (int v = 0; v < nv; ++v)
      maxdeg[v] = std::max(maxdeg[v], t.e[std::size_t(v)]);

  const std::uint64_t batch_size = 8192;
  const std::uint64_t nbatches = (opts.samples + batch_size - 1) / batch_size;
  struct BatchAcc {
    long double sum = 0, sumsq = 0;
    std::uint64_t count = 0;
  };
  std::vector<BatchAcc> batches(nbatches);

  parallel_index(nbatches, opts.jobs, [&](std::size_t b) {
    Rng rng = Rng::for_batch(opts.seed, b);
    std::uint64_t want =
        std::min(batch_size, opts.samples - std::uint64_t(b) * batch_size);
    BatchAcc acc;
    std::complex<double> x[kMaxVars];
    std::array<std::complex<double>, kMaxExp + 1> pw[kMaxVars];
    for (std::uint64_t s = 0; s < want; ++s) {
      double absf = 0;
      for (int attempt = 0; attempt < 64; ++attempt) {
        double norm2 = 0;
        for (int v = 0; v < nv; ++v) {
          // one Box-Muller pair = one complex Gaussian coordinate
          double u1 = rng.uniform(), u2 = rng.uniform();
          while (u1 <= 0) u1 = rng.uniform();
          double r = std::sqrt(-2.0 * std::log(u1));
          x[v] = {r * std::cos(kTau * u2), r * std::sin(kTau * u2)};
          norm2 += std::norm(x[v]);
        }
        if (norm2 == 0) continue;
        double inv = 1.0 / std::sqrt(norm2);
        for (int v = 0; v < nv; ++v) {
          x[v] *= inv;
          pw[v][0] = 1.0;
          for (unsigned e = 1; e <= maxdeg[v]; ++e) pw[v][e] = pw[v][e - 1] * x[v];
        }
        std::complex<double> val = 0.0;
        for (const auto& t : terms) {
          std::complex<double> term = t.c;
          for (int v = 0; v < nv; ++v)
            if (t.e[std::size_t(v)]) term *= pw[v][t.e[std::size_t(v)]];
          val += term;
        }
        absf = std::abs(val);
        if (absf > 0) break;
      }
      double lv = std::log(std::max(absf, 1e-300));
      acc.sum += lv;
      acc.sumsq += (long double)lv * lv;
      ++acc.count;
    }
    batches[b] = acc;
  });

  long double sum = 0, sumsq = 0;
  std::uint64_t count = 0;
  for (const auto& acc : batches) {  // merge in batch order
    sum += acc.sum;
    sumsq += acc.sumsq;
    count += acc.count;
  }
  double mean = double(sum / (long double)count);
  double var = std::max(0.0, double(sumsq / (long double)count) - mean * mean);
  if (count > 1) var *= double(count) / double(count - 1);
  return Estimate{mean, 3.0 * std::sqrt(var / double(count)), true};
}

Estimate philippon_height(const QPoly& f, const MahlerOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("philippon_height: zero polynomial");
  if (!f.is_homogeneous())
    throw std::invalid_argument("philippon_height: input must be homogeneous");
  mpq_class scale = content_primitive(f).scale;
  Estimate mah = mahler_measure_log(f, opts);
  return Estimate{-log_of_abs_q(scale) + mah.value, mah.error, mah.converged};
}

std::vector<HeightInequality> check_height_inequalities(const QPoly& f,
                                                        const HeightReport& rpt) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("check_height_inequalities: need nonzero homogeneous input");
  std::vector<HeightInequality> out;
  const int nv = f.nvars();
  const unsigned n = unsigned(nv - 1);
  const unsigned delta = unsigned(std::max(f.total_degree(), 0));
  const double log2 = std::log(2.0);

  std::vector<long> dj(static_cast<std::size_t>(nv), 0);
  for (int v = 0; v < nv; ++v) dj[std::size_t(v)] = std::max(f.degree_in(v), 0);

  mpq_class sumsq = 0, maxabs = 0;
  for (const auto& t : f.terms()) {
    sumsq += t.coeff * t.coeff;
    maxabs = std::max(maxabs, abs_q(t.coeff));
  }
  const double log_max = log_of_abs_q(maxabs);

  auto push = [&](std::string name, double lhs, double rhs, double tol, bool pass) {
    out.push_back({std::move(name), lhs, rhs, rhs - lhs, tol, pass});
  };
  auto push_tol = [&](std::string name, double lhs, double rhs, double tol) {
    bool ok = lhs <= rhs + tol;
    push(std::move(name), lhs, rhs, tol, ok);
  };

  const double h = rpt.classical;
  const double hph = rpt.philippon.value, hph_err = rpt.philippon.error;

  push_tol("philippon_lower_bounds_classical",
           hph - 0.5 * std::log(double((n + 1) * (delta + 1))), h, hph_err);
  push_tol("classical_le_philippon_plus_2log", h,
           hph + double(n + 1) * double(delta) * log2, hph_err);

  if (rpt.zero_norm.converged) {
    const double mtol = rpt.mahler.error + rpt.zero_norm.error;
    push_tol("zero_norm_le_mahler", rpt.zero_norm.value, rpt.mahler.value, mtol);
    push_tol("mahler_zero_norm_gap_le_4delta", rpt.mahler.value - rpt.zero_norm.value,
             4.0 * double(delta) * std::log(double(n + 1)), mtol);
  }

  // exact coefficient-space inequalities, zero tolerance
  mpz_class degprod = 1;
  for (long d : dj) degprod *= mpz_class(d + 1);
  bool l2_le = sumsq <= mpq_class(degprod) * maxabs * maxabs;
  push("l2_le_degreeprod_max", rpt.l2,
       0.5 * log(Real::of(degprod, 64)).to_double() + log_max, 0.0, l2_le);

  bool max_le_l2 = maxabs * maxabs <= sumsq;
  push("max_le_l2", log_max, rpt.l2, 0.0, max_le_l2);

  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n + delta, delta);
  bool l2_le_binom = sumsq <= mpq_class(binom) * maxabs * maxabs;
  push("l2_le_binom_max", rpt.l2,
       0.5 * log(Real::of(binom, 64)).to_double() + log_max, 0.0, l2_le_binom);

  // coefficient bounds against the Mahler upper estimate M_hat + err
  const double mah_upper = rpt.mahler.value + rpt.mahler.error;
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& t : f.terms()) {
    double logbin = 0;
    for (int v = 0; v < nv; ++v) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), (unsigned long)dj[std::size_t(v)], t.mon.exp(v));
      logbin += log(Real::of(b, 64)).to_double();
    }
    worst = std::max(worst, log_of_abs_q(t.coeff) - logbin);
  }
  push("coeff_le_binom_mahler", worst, mah_upper, 0.0, worst <= mah_upper);

  long sumdeg = 0;
  for (long d : dj) sumdeg += d;
  push("max_le_2powdeg_mahler", log_max, double(sumdeg) * log2 + mah_upper, 0.0,
       log_max <= double(sumdeg) * log2 + mah_upper);

  push_tol("mahler_le_l2", rpt.mahler.value, rpt.l2, rpt.mahler.error);
  return out;
}

HeightReport height_report(const QPoly& f, const MahlerOptions& mopts,
                           const ZeroNormOptions& zopts) {
  if (f.is_zero()) throw std::invalid_argument("height_report: zero polynomial");
  HeightReport rpt;
  rpt.homogeneous = f.is_homogeneous();
  rpt.scale = content_primitive(f).scale;
  rpt.classical_witness = classical_height_witness(f);
  rpt.classical = log(Real::of(rpt.classical_witness, 128)).to_double();
  rpt.l2 = l2_norm_log(f);
  rpt.mahler = mahler_measure_log(f, mopts, &rpt.mahler_method);
  if (rpt.homogeneous) {
    rpt.zero_norm = zero_norm_log(f, zopts);
    rpt.philippon =
        Estimate{-log_of_abs_q(rpt.scale) + rpt.mahler.value, rpt.mahler.error,
                 rpt.mahler.converged};
    rpt.inequalities = check_height_inequalities(f, rpt);
  } else {
    rpt.zero_norm = {0.0, std::numeric_limits<double>::infinity(), false};
    rpt.philippon = {0.0, std::numeric_limits<double>::infinity(), false};
  }
  return rpt;
}

}  // namespace redcert
