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

#include "nacf/discrim.hpp"

#include <algorithm>
#include <map>

#include "nacf/arith.hpp"
#include "nacf/error.hpp"

namespace nacf {

namespace {

const std::vector<u64> &primes_below_million()
{
  static const std::vector<u64> primes = primes_in_range(2, 1000000);
  return primes;
}

// Pollard-Brent rho; returns a nontrivial factor of composite n, or 0.
mpz_class pollard_brent(const mpz_class &n, unsigned long c, unsigned long budget)
{
  mpz_class y = 2, x, g = 1, q = 1, ys;
  unsigned long r = 1, steps = 0;
  const unsigned long m = 128;
  auto f = [&](mpz_class &v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i)
      f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        f(y);
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      steps += lim;
    }
    r *= 2;
    if (steps > budget)
      return 0;
  }
  if (g == n) {
    do {
      f(ys);
      mpz_class d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

bool is_probable_prime(const mpz_class &n)
{
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Splits n > 1 (no factors below the trial bound) into primes where possible.
void split_cofactor(const mpz_class &n, std::map<mpz_class, int> &out, mpz_class &unfactored, int mult)
{
  if (n == 1)
    return;
  if (is_probable_prime(n)) {
    out[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
        split_cofactor(root, out, unfactored, mult * static_cast<int>(e));
        return;
      }
    }
  }
  // Budget grows with size, capped so large semiprimes fail fast.
  unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  unsigned long budget = bits <= 96 ? (1ul << 26) : (1ul << 20);
  for (unsigned long c = 1; c <= 4; ++c) {
    mpz_class d = pollard_brent(n, c, budget);
    if (d != 0) {
      split_cofactor(d, out, unfactored, mult);
      split_cofactor(n / d, out, unfactored, mult);
      return;
    }
  }
  for (int i = 0; i < mult; ++i)
    unfactored *= n;
}

int parity_sign(long e)
{
  return (e % 2 == 0) ? 1 : -1;
}

} // namespace

Matrix sylvester_matrix(const IntPolynomial &f, const IntPolynomial &g)
{
  if (f.is_zero() || g.is_zero())
    throw DomainError("sylvester_matrix: zero polynomial");
  int m = f.degree(), n = g.degree();
  int size = m + n;
  Matrix s(size, std::vector<mpz_class>(size));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      s[r][r + i] = f.coeffs()[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[n + r][r + i] = g.coeffs()[n - i];
  return s;
}

mpz_class determinant_bareiss(Matrix a)
{
  std::size_t n = a.size();
  if (n == 0)
    return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0)
        ++piv;
      if (piv == n)
        return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    const mpz_class &pk = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::vector<mpz_class> &row = a[i];
      if (row[k] == 0) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (row[j] == 0)
            continue;
          row[j] *= pk;
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        row[j] *= pk;
        mpz_submul(row[j].get_mpz_t(), row[k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[k] = 0;
    }
    prev = pk;
  }
  return sign * a[n - 1][n - 1];
}

mpz_class resultant(const IntPolynomial &f, const IntPolynomial &g)
{
  return determinant_bareiss(sylvester_matrix(f, g));
}

IntegerFactorization factor_integer(const mpz_class &n, unsigned long trial_bound)
{
  if (n == 0)
    throw DomainError("factor_integer: zero");
  IntegerFactorization out;
  out.sign = n < 0 ? -1 : 1;
  mpz_class rest = abs(n);
  std::map<mpz_class, int> found;

  std::vector<u64> larger;
  if (trial_bound > 1000000)
    larger = primes_in_range(2, trial_bound);
  const std::vector<u64> &primes = larger.empty() ? primes_below_million() : larger;
  for (u64 q : primes) {
    if (q > trial_bound)
      break;
    if (rest == 1)
      break;
    if (mpz_class(q) * q > rest) {
      found[rest] += 1;
      rest = 1;
      break;
    }
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), q))
      continue;
    int e = static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(q).get_mpz_t()));
    found[mpz_class(q)] += e;
  }
  split_cofactor(rest, found, out.unfactored, 1);
  out.factors.assign(found.begin(), found.end());
  return out;
}

mpz_class squarefree_part(const IntegerFactorization &fac)
{
  mpz_class d = fac.sign;
  for (const auto &[p, e] : fac.factors) {
    if (e % 2)
      d *= p;
  }
  // Cofactor: strip any square it visibly is, otherwise keep it whole.
  mpz_class u = fac.unfactored;
  if (u != 1 && mpz_perfect_square_p(u.get_mpz_t()))
    u = 1;
  return d * u;
}

DiscriminantReport make_discriminant_report(const mpz_class &disc)
{
  if (disc == 0)
    throw DomainError("discriminant is zero: repeated roots");
  DiscriminantReport r;
  r.disc = disc;
  r.factorization = factor_integer(disc);
  r.factorization_complete = r.factorization.complete();
  r.squarefree_part = squarefree_part(r.factorization);
  r.is_square = r.squarefree_part == 1;
  if (!r.is_square)
    r.quad_field = r.squarefree_part;
  return r;
}

DiscriminantReport discriminant(const IntPolynomial &f)
{
  if (f.degree() < 1)
    throw DomainError("discriminant: degree must be >= 1");
  long d = f.degree();
  mpz_class res = resultant(f, f.derivative());
  mpz_class q;
  if (!mpz_divisible_p(res.get_mpz_t(), f.leading().get_mpz_t()))
    throw InvariantViolation("discriminant: leading coefficient does not divide Res(f, f')");
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  return make_discriminant_report(parity_sign(d * (d - 1) / 2) * q);
}

mpz_class closed_form_disc_f1n(long n)
{
  if (n < 2)
    throw DomainError("closed_form_disc_f1n: n must be >= 2");
  mpq_class v = 2 * parity_sign((n + 2) * (n - 1) / 2);
  mpz_class nn = n, n1 = n + 1;
  mpz_class t;
  auto pw = [&](const mpz_class &b, long e) {
    mpq_class r;
    mpz_pow_ui(t.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    r = t;
    return e < 0 ? mpq_class(1) / r : r;
  };
  v *= pw(nn, n - 3);
  v *= pw(n1, n - 2);
  v.canonicalize();
  if (v.get_den() != 1)
    throw InvariantViolation("closed_form_disc_f1n: value is not an integer");
  return v.get_num();
}

mpz_class closed_form_resultant_g1n(long n)
{
  if (n < 2)
    throw DomainError("closed_form_resultant_g1n: n must be >= 2");
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), n, n - 1);
  mpz_ui_pow_ui(b.get_mpz_t(), n + 1, n);
  mpz_class v = a * b;
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
  return parity_sign(n - 1) * v;
}

IntegerFactorization closed_form_disc_f1n_factorization(long n)
{
  if (n < 2)
    throw DomainError("closed_form_disc_f1n_factorization: n must be >= 2");
  std::map<mpz_class, int> exps;
  exps[2] += 1;
  for (auto [p, e] : factor_u64(static_cast<u64>(n)))
    exps[mpz_class(static_cast<unsigned long>(p))] += e * static_cast<int>(n - 3);
  for (auto [p, e] : factor_u64(static_cast<u64>(n + 1)))
    exps[mpz_class(static_cast<unsigned long>(p))] += e * static_cast<int>(n - 2);
  IntegerFactorization out;
  out.sign = parity_sign((n + 2) * (n - 1) / 2);
  for (auto &[p, e] : exps) {
    if (e < 0)
      throw InvariantViolation("closed_form_disc_f1n_factorization: negative exponent");
    if (e > 0)
      out.factors.emplace_back(p, e);
  }
  return out;
}

mpq_class disc_case_table_value(long n)
{
  if (n < 3)
    throw DomainError("disc_case_table_value: n must be >= 3");
  auto pw = [](long b, long e) {
    mpq_class r;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e < 0 ? -e : e));
    r = t;
    return e < 0 ? mpq_class(1) / r : r;
  };
  long l = n / 4;
  mpq_class v;
  switch (n % 4) {
  case 0:
    v = mpq_class(-2 * l) * 4 * pw(4 * l, 4 * l - 4) * pw(4 * l + 1, 4 * l - 2);
    break;
  case 1: {
    mpq_class inner = pw(2, 2 * l) * pw(4 * l + 1, l - 1) * pw(2 * l + 1, 2 * l);
    v = inner * inner * pw(2 * l + 1, -1);
    break;
  }
  case 2:
    v = pw(2 * (2 * l + 1) * (4 * l + 3), 4 * l) * pw(2 * l + 1, -1);
    break;
  default:
    v = mpq_class(-2 * (l + 1)) * pw(4, 4 * l + 1) * pw(4 * l + 3, 4 * l) * pw(l + 1, 4 * l);
    break;
  }
  v.canonicalize();
  return v;
}

QuadraticSubfield quadratic_subfield(long n)
{
  if (n < 3)
    throw DomainError("quadratic_subfield: n must be >= 3");
  QuadraticSubfield q;
  q.n = n;
  mpz_class d = squarefree_part(closed_form_disc_f1n_factorization(n));
  if (d != 1)
    q.radicand = d;

  long l = n / 4;
  switch (n % 4) {
  case 0: q.table_radicand = -2 * l; break;
  case 1:
  case 2: q.table_radicand = 2 * l + 1; break;
  default: q.table_radicand = -2 * (l + 1); break;
  }
  IntegerFactorization tf;
  tf.sign = q.table_radicand < 0 ? -1 : 1;
  for (auto [p, e] : factor_u64(mpz_class(abs(q.table_radicand)).get_ui()))
    tf.factors.emplace_back(mpz_class(static_cast<unsigned long>(p)), e);
  q.table_radicand_reduced = squarefree_part(tf);
  q.table_radicand_unreduced = q.table_radicand_reduced != q.table_radicand;
  q.table_agrees = q.table_radicand_reduced == d;
  return q;
}

std::optional<mpz_class> closed_form_disc_mf1n(long m, long n)
{
  mpz_class M = m;
  if (n == 3)
    return mpz_class(-M * (M + 2));
  if (n == 4) {
    mpz_class num = -M * M * (M + 1) * (M + 2) * (M + 3) * (M + 3);
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 6))
      throw InvariantViolation("closed_form_disc_mf1n: not integral");
    return mpz_class(num / 6);
  }
  return std::nullopt;
}

} // namespace nacf
