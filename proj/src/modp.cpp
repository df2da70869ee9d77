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

#include "nacf/modp.hpp"

#include <algorithm>
#include <sstream>

#include "nacf/error.hpp"

namespace nacf {

namespace {

using Poly = std::vector<u64>;

// Degrees above this use the Frobenius matrix instead of powering x^p.
constexpr int kFrobeniusMatrixDegree = 32;

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

int deg(const Poly &a)
{
  return static_cast<int>(a.size()) - 1;
}

u64 addm(u64 a, u64 b, u64 p)
{
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

u64 subm(u64 a, u64 b, u64 p)
{
  return a >= b ? a - b : a + (p - b);
}

Poly mul(const Poly &a, const Poly &b, u64 p)
{
  if (a.empty() || b.empty())
    return {};
  std::size_t n = a.size() + b.size() - 1;
  Poly out(n);
  if (p < (u64{1} << 32)) {
    std::vector<u128> acc(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0)
        continue;
      u64 ai = a[i];
      for (std::size_t j = 0; j < b.size(); ++j)
        acc[i + j] += static_cast<u128>(ai * b[j]);
    }
    for (std::size_t k = 0; k < n; ++k)
      out[k] = static_cast<u64>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        out[i + j] = addm(out[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

// Remainder of a modulo a monic m.
void reduce_monic(Poly &a, const Poly &m, u64 p)
{
  int dm = deg(m);
  for (int i = deg(a); i >= dm; --i) {
    u64 c = a[i];
    if (c == 0)
      continue;
    for (int j = 0; j < dm; ++j)
      a[i - dm + j] = subm(a[i - dm + j], mulmod(c, m[j], p), p);
    a[i] = 0;
  }
  trim(a);
}

Poly make_monic(Poly a, u64 p)
{
  if (a.empty() || a.back() == 1)
    return a;
  u64 inv = invmod(a.back(), p);
  for (auto &c : a)
    c = mulmod(c, inv, p);
  return a;
}

Poly mulmod_poly(const Poly &a, const Poly &b, const Poly &m, u64 p)
{
  Poly r = mul(a, b, p);
  reduce_monic(r, m, p);
  return r;
}

Poly gcd(Poly a, Poly b, u64 p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(std::move(b), p);
    reduce_monic(a, b, p);
    std::swap(a, b);
  }
  return make_monic(std::move(a), p);
}

// Exact quotient a / m for monic m dividing a.
Poly divexact(const Poly &a, const Poly &m, u64 p)
{
  int dm = deg(m);
  Poly r(a);
  Poly q(deg(a) - dm + 1);
  for (int i = deg(a); i >= dm; --i) {
    u64 c = r[i];
    q[i - dm] = c;
    if (c == 0)
      continue;
    for (int j = 0; j <= dm; ++j)
      r[i - dm + j] = subm(r[i - dm + j], mulmod(c, m[j], p), p);
  }
  trim(r);
  if (!r.empty())
    throw InvariantViolation("modp: inexact polynomial division");
  trim(q);
  return q;
}

Poly derivative(const Poly &a, u64 p)
{
  if (a.size() < 2)
    return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

Poly powmod_poly(Poly base, u64 e, const Poly &m, u64 p)
{
  Poly r{1};
  reduce_monic(base, m, p);
  while (e) {
    if (e & 1)
      r = mulmod_poly(r, base, m, p);
    e >>= 1;
    if (e)
      base = mulmod_poly(base, base, m, p);
  }
  return r;
}

/// h -> h^p mod F, for a fixed monic F.
class Frobenius {
public:
  Frobenius(const Poly &F, u64 p) : F_(F), p_(p)
  {
    n_ = deg(F);
    if (n_ > kFrobeniusMatrixDegree) {
      // Row i holds x^{ip} mod F; h^p = sum h_i x^{ip} in characteristic p.
      Poly xp = powmod_poly({0, 1}, p, F, p);
      rows_.reserve(n_);
      rows_.push_back({1});
      for (int i = 1; i < n_; ++i)
        rows_.push_back(mulmod_poly(rows_.back(), xp, F, p));
    }
  }

  Poly operator()(const Poly &h) const
  {
    if (rows_.empty())
      return powmod_poly(h, p_, F_, p_);
    Poly out(n_, 0);
    if (p_ < (u64{1} << 32)) {
      std::vector<u128> acc(n_, 0);
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] == 0)
          continue;
        const Poly &row = rows_[i];
        for (std::size_t j = 0; j < row.size(); ++j)
          acc[j] += static_cast<u128>(h[i] * row[j]);
      }
      for (int j = 0; j < n_; ++j)
        out[j] = static_cast<u64>(acc[j] % p_);
    } else {
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
          out[j] = addm(out[j], mulmod(h[i], rows_[i][j], p_), p_);
    }
    trim(out);
    return out;
  }

private:
  Poly F_;
  u64 p_;
  int n_ = 0;
  std::vector<Poly> rows_;
};

} // namespace

PrimeModulus::PrimeModulus(u64 p) : p_(p)
{
  if (p >= (u64{1} << 63) || !is_prime_u64(p))
    throw DomainError("PrimeModulus: " + std::to_string(p) + " is not a prime below 2^63");
}

ModPolynomial::ModPolynomial(PrimeModulus p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs))
{
  for (auto &c : c_)
    c %= p_.value();
  trim(c_);
}

int CycleType::total() const
{
  int s = 0;
  for (int d : degrees)
    s += d;
  return s;
}

int CycleType::count(int k) const
{
  return static_cast<int>(std::count(degrees.begin(), degrees.end(), k));
}

std::string CycleType::to_string() const
{
  if (!squarefree)
    return "ramified";
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < degrees.size(); ++i)
    os << (i ? "," : "") << degrees[i];
  os << "}";
  return os.str();
}

ModPolynomial reduce_mod_p(const IntPolynomial &f, PrimeModulus p)
{
  std::vector<u64> c(f.coeffs().size());
  mpz_class r;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p.value());
    c[i] = r.get_ui();
  }
  return ModPolynomial(p, std::move(c));
}

bool is_squarefree_mod_p(const ModPolynomial &f)
{
  u64 p = f.modulus().value();
  const Poly &a = f.coeffs();
  if (a.empty())
    throw DomainError("is_squarefree_mod_p: zero polynomial");
  return deg(gcd(a, derivative(a, p), p)) == 0;
}

CycleType factor_cycle_type(const ModPolynomial &f)
{
  if (f.is_zero())
    throw DomainError("factor_cycle_type: zero polynomial");
  if (f.degree() < 1)
    throw DomainError("factor_cycle_type: constant polynomial");

  u64 p = f.modulus().value();
  Poly F = make_monic(f.coeffs(), p);
  if (!is_squarefree_mod_p(f))
    return CycleType{{}, false};

  CycleType ct;
  if (deg(F) == 1) {
    ct.degrees = {1};
    return ct;
  }

  Frobenius frob(F, p);
  const Poly x{0, 1};
  Poly rest = F;
  Poly h = x;
  for (int d = 1; 2 * d <= deg(rest); ++d) {
    h = frob(h);
    Poly hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
    hx[1] = subm(hx[1], 1, p);
    trim(hx);
    Poly g = gcd(rest, hx, p);
    int dg = deg(g);
    if (dg > 0) {
      if (dg % d != 0)
        throw InvariantViolation("factor_cycle_type: degree-" + std::to_string(d) +
                                 " product has degree " + std::to_string(dg));
      ct.degrees.insert(ct.degrees.end(), dg / d, d);
      rest = divexact(rest, g, p);
    }
  }
  if (deg(rest) > 0)
    ct.degrees.push_back(deg(rest));
  std::sort(ct.degrees.begin(), ct.degrees.end());
  return ct;
}

bool is_irreducible_mod_p(const ModPolynomial &f)
{
  CycleType ct = factor_cycle_type(f);
  return ct.squarefree && ct.degrees.size() == 1 && ct.degrees[0] == f.degree();
}

} // namespace nacf
