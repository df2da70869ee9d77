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

#include "nacf/qfield.hpp"

#include <cmath>
#include <numeric>

#include "nacf/error.hpp"
#include "nacf/modp.hpp"
#include "nacf/polyz.hpp"

namespace nacf {

std::string QuadInt::to_string() const
{
  std::string s = a.get_str();
  if (b >= 0)
    s += "+";
  return s + b.get_str() + "*sqrt(-2)";
}

QuadInt pow(QuadInt z, unsigned e)
{
  QuadInt r{1, 0};
  for (; e; e >>= 1) {
    if (e & 1)
      r = r * z;
    z = z * z;
  }
  return r;
}

QuadIdeal::QuadIdeal(const QuadInt &z) : gen_(z)
{
  if (z.a == 0 && z.b == 0)
    throw DomainError("QuadIdeal: zero ideal");
  if (gen_.a < 0 || (gen_.a == 0 && gen_.b < 0))
    gen_ = {-gen_.a, -gen_.b};
}

std::vector<QuadIdeal> ideals_of_norm(long n)
{
  if (n < 1)
    throw DomainError("ideals_of_norm: n must be >= 1");
  std::vector<QuadIdeal> out;
  long b_max = 0;
  while (2 * (b_max + 1) * (b_max + 1) <= n)
    ++b_max;
  for (long b = b_max; b >= -b_max; --b) {
    long rest = n - 2 * b * b;
    long a = std::lround(std::sqrt(static_cast<double>(rest)));
    while (a * a > rest)
      --a;
    while ((a + 1) * (a + 1) <= rest)
      ++a;
    if (a * a != rest)
      continue;
    if (a > 0 || b > 0)
      out.emplace_back(QuadInt{a, b});
  }
  return out;
}

bool in_modulus(const QuadInt &z)
{
  return mpz_divisible_ui_p(z.a.get_mpz_t(), 10) && mpz_divisible_ui_p(z.b.get_mpz_t(), 5);
}

namespace {

void require_coprime(const QuadInt &z)
{
  mpz_class g;
  mpz_class n = z.norm();
  mpz_gcd_ui(g.get_mpz_t(), n.get_mpz_t(), 50);
  if (g != 1)
    throw DomainError("element not coprime to the modulus: " + z.to_string());
}

} // namespace

bool h_membership(const QuadInt &z)
{
  require_coprime(z);
  mpz_class ab = z.a * z.b;
  return mpz_divisible_ui_p(ab.get_mpz_t(), 5) != 0;
}

bool h_membership_union(const QuadInt &z)
{
  require_coprime(z);
  for (const QuadInt &g : {z, QuadInt{-z.a, -z.b}}) {
    // z - l lies in m for some integer l; l only matters mod 10.
    for (long l = 0; l < 10; ++l) {
      mpz_class r = g.a - l;
      if (in_modulus(QuadInt{r, g.b}))
        return true;
    }
    if (in_modulus(QuadInt{0, g.a * g.b}))
      return true;
  }
  return false;
}

int ray_class(const QuadIdeal &ideal, const RayClassContext &ctx)
{
  const QuadInt &p3 = ctx.generator_class.generator();
  int found = -1;
  for (int t = 0; t < ctx.group_order; ++t) {
    QuadInt shift = pow(p3, static_cast<unsigned>(ctx.group_order - t));
    QuadInt g = ideal.generator();
    bool plus = h_membership(g * shift);
    bool minus = h_membership(QuadInt{-g.a, -g.b} * shift);
    if (plus != minus)
      throw InvariantViolation("ray_class: associates disagree");
    if (plus) {
      if (found >= 0)
        throw InvariantViolation("ray_class: class is not unique");
      found = t;
    }
  }
  if (found < 0)
    throw InvariantViolation("ray_class: no class found for " + ideal.generator().to_string());
  return found;
}

std::string CycloInt::to_string() const
{
  if (v == 0)
    return std::to_string(u);
  std::string s = std::to_string(u);
  s += v < 0 ? "-" : "+";
  return s + std::to_string(v < 0 ? -v : v) + "w";
}

CycloInt HeckeCharacter::value(int t) const
{
  CycloInt r{1, 0};
  for (int i = 0; i < ((t % 3) + 3) % 3; ++i)
    r = r * omega;
  return r;
}

CycloInt HeckeCharacter::operator()(const QuadIdeal &ideal, const RayClassContext &ctx) const
{
  return value(ray_class(ideal, ctx));
}

i64 ThetaSeries::a(long n) const
{
  if (n < 1 || n > n_max)
    throw DomainError("ThetaSeries: index out of range");
  if (!coeffs[n].is_integer())
    throw DomainError("ThetaSeries: a(" + std::to_string(n) + ") is not an integer");
  return coeffs[n].u;
}

ThetaSeries theta_coefficients(long n_max)
{
  if (n_max < 1)
    throw DomainError("theta_coefficients: n_max must be >= 1");
  ThetaSeries th;
  th.n_max = n_max;
  th.coeffs.assign(n_max + 1, CycloInt{});
  RayClassContext ctx;
  HeckeCharacter chi;
  long b_max = 0;
  while (2 * (b_max + 1) * (b_max + 1) <= n_max)
    ++b_max;
  for (long a = 0; a * a <= n_max; ++a) {
    for (long b = -b_max; b <= b_max; ++b) {
      long n = a * a + 2 * b * b;
      if (n > n_max || (a == 0 && b <= 0) || std::gcd(n, 50L) != 1)
        continue;
      th.coeffs[n] = th.coeffs[n] + chi(QuadIdeal(QuadInt{a, b}), ctx);
    }
  }
  for (long n = 1; n <= n_max; ++n)
    th.all_integral = th.all_integral && th.coeffs[n].is_integer();
  return th;
}

bool split_in_L(u64 p)
{
  if (!is_prime_u64(p))
    throw DomainError("split_in_L: " + std::to_string(p) + " is not prime");
  if (p == 2 || p == 5)
    throw DomainError("split_in_L: " + std::to_string(p) + " is ramified");
  CycleType ct = factor_cycle_type(reduce_mod_p(build_f1n(4), PrimeModulus(p)));
  return ct.squarefree && ct.degrees == std::vector<int>{1, 1, 1};
}

RepReport rep_x2_2y2(u64 p)
{
  if (!is_prime_u64(p))
    throw DomainError("rep_x2_2y2: " + std::to_string(p) + " is not prime");
  RepReport r;
  r.p = p;
  for (u64 y = 0; 2 * y * y <= p; ++y) {
    u64 rest = p - 2 * y * y;
    u64 x = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (x * x > rest)
      --x;
    while ((x + 1) * (x + 1) <= rest)
      ++x;
    if (x * x == rest) {
      r.reps.push_back({x, y});
      r.fifteen = r.fifteen || (x * y) % 15 == 0;
    }
  }
  return r;
}

Thm51Report theorem51_equivalence(u64 p_max)
{
  if (p_max < 10)
    throw DomainError("theorem51_equivalence: p_max must be >= 10");
  Thm51Report rep;
  rep.p_max = p_max;
  ThetaSeries th = theta_coefficients(static_cast<long>(p_max));
  for (u64 p : primes_in_range(2, p_max)) {
    if (p == 2 || p == 5)
      continue;
    ++rep.checked;
    bool split = split_in_L(p);
    bool fifteen = rep_x2_2y2(p).fifteen;
    i64 ap = th.a(static_cast<long>(p));
    rep.split_count += split;
    if (split != fifteen || split != (ap == 2))
      rep.violations.push_back({p, split, fifteen, ap});
  }
  return rep;
}

FactReport fact_xy_mod3(u64 p_max)
{
  FactReport r;
  for (u64 p : primes_in_range(2, p_max)) {
    if (p <= 3)
      continue;
    for (const auto &rep : rep_x2_2y2(p).reps) {
      ++r.checked;
      if ((rep.x * rep.y) % 3 != 0)
        r.violations.push_back(std::to_string(p) + " = " + std::to_string(rep.x) + "^2 + 2*" +
                               std::to_string(rep.y) + "^2");
    }
  }
  return r;
}

FactReport fact_cube_mod5(long range)
{
  FactReport r;
  for (long a = -range; a <= range; ++a) {
    for (long b = -range; b <= range; ++b) {
      ++r.checked;
      mpz_class A = a, B = b;
      mpz_class X = A * (A * A - 6 * B * B);
      mpz_class Y = B * (3 * A * A - 2 * B * B);
      QuadInt cube = pow(QuadInt{A, B}, 3);
      mpz_class XY = X * Y;
      if (cube.a != X || cube.b != Y || !mpz_divisible_ui_p(XY.get_mpz_t(), 5))
        r.violations.push_back("(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  return r;
}

namespace {

// prod_{n>=1} (1 - x^n) up to x^limit, by pentagonal exponents.
std::vector<i64> euler_product(long limit)
{
  std::vector<i64> c(limit + 1, 0);
  c[0] = 1;
  for (long k = 1; k * (3 * k - 1) / 2 <= limit; ++k) {
    i64 sign = k % 2 ? -1 : 1;
    c[k * (3 * k - 1) / 2] += sign;
    if (k * (3 * k + 1) / 2 <= limit)
      c[k * (3 * k + 1) / 2] += sign;
  }
  return c;
}

} // namespace

std::vector<i64> eta_product_expansion(long a, long b, long n_max)
{
  if (a < 1 || b < 1 || a + b != 24)
    throw DomainError("eta_product_expansion: need a, b >= 1 with a + b = 24");
  if (n_max < 1)
    throw DomainError("eta_product_expansion: n_max must be >= 1");
  std::vector<i64> e = euler_product(n_max);
  std::vector<i64> out(n_max + 1, 0);
  for (long i = 0; a * i < n_max; ++i) {
    if (e[i] == 0)
      continue;
    for (long j = 0; 1 + a * i + b * j <= n_max; ++j)
      out[1 + a * i + b * j] += e[i] * e[j];
  }
  return out;
}

std::vector<EtaMismatch> eta_product_mismatch(long n_max)
{
  if (n_max < 5)
    throw DomainError("eta_product_mismatch: n_max must be >= 5");
  ThetaSeries th = theta_coefficients(n_max);
  std::vector<u64> split;
  for (u64 p : primes_in_range(3, static_cast<u64>(n_max)))
    if (p != 5 && split_in_L(p))
      split.push_back(p);

  std::vector<EtaMismatch> out;
  for (long a = 1; a <= 12; ++a) {
    const long b = 24 - a;
    EtaMismatch m;
    m.a = a;
    m.b = b;
    std::vector<i64> c = eta_product_expansion(a, b, n_max);
    for (long n = 1; n <= n_max; ++n) {
      if (c[n] != th.a(n)) {
        m.first_mismatch = n;
        m.eta_coeff = c[n];
        m.theta_coeff = th.a(n);
        break;
      }
    }
    // |6n - 1| runs once over the positive integers prime to 6.
    for (u64 p : split) {
      for (long mult : {12L, 24L}) {
        long target = mult * static_cast<long>(p);
        long count = 0;
        for (long s = 1; a * s * s < target; ++s) {
          if (std::gcd(s, 6L) != 1)
            continue;
          long rest = target - a * s * s;
          if (rest % b)
            continue;
          long t2 = rest / b;
          long t = std::lround(std::sqrt(static_cast<double>(t2)));
          if (t * t == t2 && std::gcd(t, 6L) == 1)
            ++count;
        }
        (mult == 12 ? m.solutions_12p : m.solutions_24p) += count;
      }
    }
    out.push_back(m);
  }
  return out;
}

} // namespace nacf
