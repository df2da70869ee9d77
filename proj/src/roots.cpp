/*
   Copyright 2026 The nacf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nacf/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nacf/error.hpp"

namespace nacf {

namespace {

template<typename R>
struct Cx {
  R re;
  R im;
};

template<typename R>
struct Real;

template<>
struct Real<double> {
  static double make(double v, unsigned) { return v; }
  static double make(const mpz_class &v, unsigned) { return v.get_d(); }
  static double sqrt(double v) { return std::sqrt(v); }
  static double to_double(double v) { return v; }
  static double unit_roundoff(unsigned) { return std::numeric_limits<double>::epsilon() / 2; }
};

template<>
struct Real<mpf_class> {
  static mpf_class make(double v, unsigned bits) { return mpf_class(v, bits); }
  static mpf_class make(const mpz_class &v, unsigned bits) { return mpf_class(v, bits); }
  static mpf_class sqrt(const mpf_class &v) { return mpf_class(::sqrt(v)); }
  static double to_double(const mpf_class &v) { return v.get_d(); }
  static double unit_roundoff(unsigned bits) { return std::ldexp(1.0, -static_cast<int>(bits)); }
};

template<typename R>
R cabs(const Cx<R> &a)
{
  return Real<R>::sqrt(R(a.re * a.re + a.im * a.im));
}

template<typename R>
Cx<R> cmul(const Cx<R> &a, const Cx<R> &b)
{
  return {R(a.re * b.re - a.im * b.im), R(a.re * b.im + a.im * b.re)};
}

template<typename R>
Cx<R> cdiv(const Cx<R> &a, const Cx<R> &b)
{
  R den(b.re * b.re + b.im * b.im);
  return {R((a.re * b.re + a.im * b.im) / den), R((a.im * b.re - a.re * b.im) / den)};
}

template<typename R>
Cx<R> csub(const Cx<R> &a, const Cx<R> &b)
{
  return {R(a.re - b.re), R(a.im - b.im)};
}

template<typename R>
struct Eval {
  Cx<R> ratio;    // f(z) / f'(z)
  double rel = 0; // |f(z)| / sum |a_k| |z|^k
  double log_sum = 0; // log of sum |a_k| |z|^k
};

template<typename R>
R rabs(const R &v)
{
  return v < 0 ? R(-v) : v;
}

// Horner on p(w) = sum b_k w^k, together with p'(w) and sum |b_k| |w|^k.
template<typename R>
void horner(const std::vector<R> &b, const Cx<R> &w, const R &aw, unsigned bits, Cx<R> &p,
            Cx<R> &dp, R &s)
{
  R zero = Real<R>::make(0.0, bits);
  p = {b.back(), zero};
  dp = {zero, zero};
  s = rabs(b.back());
  for (int k = static_cast<int>(b.size()) - 2; k >= 0; --k) {
    dp = cmul(dp, w);
    dp.re += p.re;
    dp.im += p.im;
    p = cmul(p, w);
    p.re += b[k];
    s = s * aw + rabs(b[k]);
  }
}

// For |z| > 1 the reversed polynomial is evaluated at 1/z so that nothing
// overflows: f(z) = z^d r(y), f'(z) = z^{d-1} (d r(y) - y r'(y)).
template<typename R>
Eval<R> evaluate(const std::vector<R> &a, const std::vector<R> &rev, const Cx<R> &z, unsigned bits)
{
  const int d = static_cast<int>(a.size()) - 1;
  R az = cabs(z);
  Cx<R> p, dp;
  R s;
  Eval<R> e;
  if (Real<R>::to_double(az) <= 1.0) {
    horner(a, z, az, bits, p, dp, s);
    e.ratio = cdiv(p, dp);
    double sd = Real<R>::to_double(s);
    e.rel = Real<R>::to_double(cabs(p)) / sd;
    e.log_sum = std::log(sd);
    return e;
  }
  R one = Real<R>::make(1.0, bits);
  Cx<R> y = cdiv(Cx<R>{one, Real<R>::make(0.0, bits)}, z);
  R ay(one / az);
  horner(rev, y, ay, bits, p, dp, s);
  Cx<R> ydp = cmul(y, dp);
  Cx<R> den{R(p.re * d - ydp.re), R(p.im * d - ydp.im)};
  e.ratio = cdiv(cmul(z, p), den);
  double sd = Real<R>::to_double(s);
  e.rel = Real<R>::to_double(cabs(p)) / sd;
  e.log_sum = std::log(sd) + d * std::log(Real<R>::to_double(az));
  return e;
}

template<typename R>
struct Pass {
  std::vector<Cx<R>> z;
  std::vector<double> residuals;
  std::vector<double> radii;
  int sweeps = 0;
  bool converged = false;
};

// One Aberth-Ehrlich run at a fixed working precision, followed by the
// residual and inclusion-radius computation.
template<typename R>
Pass<R> aberth(const std::vector<mpz_class> &coeffs, std::vector<Cx<R>> z, unsigned bits, int max_sweeps)
{
  std::vector<R> a;
  a.reserve(coeffs.size());
  for (const auto &c : coeffs)
    a.push_back(Real<R>::make(c, bits));
  std::vector<R> rev(a.rbegin(), a.rend());
  const int d = static_cast<int>(a.size()) - 1;
  const double u = Real<R>::unit_roundoff(bits);
  const double gamma = 4.0 * (2 * d + 1) * u;

  Pass<R> out;
  std::vector<bool> done(d, false);
  R one = Real<R>::make(1.0, bits);
  R zero = Real<R>::make(0.0, bits);
  for (out.sweeps = 0; out.sweeps < max_sweeps; ++out.sweeps) {
    bool all_done = true;
    for (int i = 0; i < d; ++i) {
      if (done[i])
        continue;
      Eval<R> e = evaluate(a, rev, z[i], bits);
      if (e.rel <= gamma) {
        done[i] = true;
        continue;
      }
      all_done = false;
      Cx<R> s{zero, zero};
      for (int j = 0; j < d; ++j) {
        if (j == i)
          continue;
        Cx<R> inv = cdiv(Cx<R>{one, zero}, csub(z[i], z[j]));
        s.re += inv.re;
        s.im += inv.im;
      }
      Cx<R> rs = cmul(e.ratio, s);
      Cx<R> den{R(one - rs.re), R(-rs.im)};
      Cx<R> w = cdiv(e.ratio, den);
      double step = Real<R>::to_double(cabs(w));
      if (!std::isfinite(step))
        continue;
      z[i] = csub(z[i], w);
      if (step <= 4 * u * Real<R>::to_double(cabs(z[i])))
        done[i] = true;
    }
    if (all_done) {
      out.converged = true;
      break;
    }
  }

  // Inclusion radii from the Weierstrass corrections
  // W_i = f(z_i) / (a_d prod_{j != i} (z_i - z_j)), r_i = d |W_i|.
  out.residuals.resize(d);
  out.radii.resize(d);
  double log_lead = std::log(std::abs(Real<R>::to_double(a.back())));
  for (int i = 0; i < d; ++i) {
    Eval<R> e = evaluate(a, rev, z[i], bits);
    out.residuals[i] = e.rel;
    double log_prod = log_lead;
    for (int j = 0; j < d; ++j) {
      if (j != i)
        log_prod += std::log(Real<R>::to_double(cabs(csub(z[i], z[j]))));
    }
    double log_num = e.log_sum + std::log(e.rel + gamma);
    double r = d * std::exp(log_num - log_prod) * (1 + gamma);
    if (!std::isfinite(r) || std::isnan(e.rel))
      r = std::numeric_limits<double>::infinity();
    // Rounding the root itself to double.
    r += 2 * std::numeric_limits<double>::epsilon() * Real<R>::to_double(cabs(z[i]));
    out.radii[i] = r;
  }
  out.z = std::move(z);
  return out;
}

bool acceptable(const std::vector<double> &residuals, double tol)
{
  return std::all_of(residuals.begin(), residuals.end(), [&](double r) { return r < tol; });
}

} // namespace

ComplexRootSet solve_roots(const IntPolynomial &f, const SolveOptions &opts)
{
  if (f.degree() < 1)
    throw DomainError("solve_roots: degree must be >= 1");

  // Exact zero roots are split off first.
  int zeros = 0;
  while (f.coeffs()[zeros] == 0)
    ++zeros;
  std::vector<mpz_class> c(f.coeffs().begin() + zeros, f.coeffs().end());
  const int d = static_cast<int>(c.size()) - 1;

  ComplexRootSet out;
  auto finish = [&](std::vector<std::complex<double>> z, const std::vector<double> &res,
                    const std::vector<double> &radii) {
    for (int i = 0; i < zeros; ++i) {
      z.emplace_back(0.0, 0.0);
      out.residuals.push_back(0.0);
      out.radii.push_back(0.0);
    }
    out.residuals.insert(out.residuals.begin(), res.begin(), res.end());
    out.radii.insert(out.radii.begin(), radii.begin(), radii.end());
    out.roots = std::move(z);
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
      double m = std::abs(out.roots[i]);
      out.modulus_bounds.push_back({std::max(0.0, m - out.radii[i]), m + out.radii[i]});
    }
    return out;
  };
  if (d == 0)
    return finish({}, {}, {});

  double r0 = std::pow(std::abs(c[0].get_d() / c[d].get_d()), 1.0 / d);
  std::vector<Cx<double>> z0(d);
  for (int k = 0; k < d; ++k) {
    double theta = 2 * std::numbers::pi * k / d + 0.4;
    z0[k] = {r0 * std::cos(theta), r0 * std::sin(theta)};
  }

  Pass<double> pass = aberth<double>(c, z0, 53, opts.max_sweeps);
  out.sweeps = pass.sweeps;
  if (pass.converged && acceptable(pass.residuals, opts.tol)) {
    std::vector<std::complex<double>> z;
    for (auto &v : pass.z)
      z.emplace_back(v.re, v.im);
    return finish(std::move(z), pass.residuals, pass.radii);
  }

  // Multiprecision retries, doubling the working precision each time.
  unsigned bits = opts.mp_start_bits;
  for (int attempt = 0; attempt < opts.max_retries; ++attempt, bits *= 2) {
    std::vector<Cx<mpf_class>> zm;
    for (auto &v : pass.z) {
      bool finite = std::isfinite(v.re) && std::isfinite(v.im);
      zm.push_back({mpf_class(finite ? v.re : 0.0, bits), mpf_class(finite ? v.im : 0.0, bits)});
    }
    if (attempt == 0 && !pass.converged) {
      for (int k = 0; k < d; ++k)
        zm[k] = {mpf_class(z0[k].re, bits), mpf_class(z0[k].im, bits)};
    }
    Pass<mpf_class> mp = aberth<mpf_class>(c, zm, bits, opts.max_sweeps);
    out.sweeps += mp.sweeps;
    if (mp.converged && acceptable(mp.residuals, opts.tol)) {
      out.precision_bits = bits;
      std::vector<std::complex<double>> z;
      for (auto &v : mp.z)
        z.emplace_back(v.re.get_d(), v.im.get_d());
      return finish(std::move(z), mp.residuals, mp.radii);
    }
    for (int k = 0; k < d; ++k)
      pass.z[k] = {mp.z[k].re.get_d(), mp.z[k].im.get_d()};
    pass.converged = true;
  }
  throw ConvergenceError("solve_roots: no convergence for " + f.to_string().substr(0, 80));
}

ComplexRootSet solve_roots(const IntPolynomial &f, double tol)
{
  SolveOptions opts;
  opts.tol = tol;
  return solve_roots(f, opts);
}

F1nBoundsReport check_bounds_f1n(long n, double tol)
{
  IntPolynomial f = build_f1n(n);
  ComplexRootSet rs = solve_roots(f, tol);
  F1nBoundsReport r;
  r.n = n;
  r.lower = 1.0;
  r.upper = std::pow(static_cast<double>(n + 1), 2.0 / static_cast<double>(n));
  r.slack = tol;
  r.min_mod = std::numeric_limits<double>::infinity();
  r.bound_ok = true;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    double m = std::abs(rs.roots[i]);
    r.min_mod = std::min(r.min_mod, m);
    r.max_mod = std::max(r.max_mod, m);
    r.max_dev_from_one = std::max(r.max_dev_from_one, std::abs(m - 1.0));
    r.max_radius = std::max(r.max_radius, rs.radii[i]);
    const ModulusInterval &iv = rs.modulus_bounds[i];
    if (iv.lo < r.lower - r.slack || iv.hi > r.upper + r.slack)
      r.bound_ok = false;
  }
  return r;
}

FpNBoundsReport check_bounds_fpN(const mpz_class &p, const mpz_class &N, double tol)
{
  IntPolynomial f = build_fpN(p, N);
  FpNBoundsReport r;
  r.p = p;
  r.N = N;
  r.degree = f.degree();
  r.lower = p.get_d();
  r.upper = r.lower * r.lower;
  r.slack = tol * r.lower;
  r.bound_ok = true;
  if (f.degree() < 1)
    return r;
  ComplexRootSet rs = solve_roots(f, tol);
  r.min_mod = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    double m = std::abs(rs.roots[i]);
    r.min_mod = std::min(r.min_mod, m);
    r.max_mod = std::max(r.max_mod, m);
    r.max_radius = std::max(r.max_radius, rs.radii[i]);
    const ModulusInterval &iv = rs.modulus_bounds[i];
    if (iv.lo < r.lower - r.slack || !(iv.hi < r.upper))
      r.bound_ok = false;
  }
  return r;
}

} // namespace nacf
