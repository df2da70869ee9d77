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

#include "nacf/polyz.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "nacf/arith.hpp"
#include "nacf/error.hpp"

namespace nacf {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs)
    coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class &c, int degree)
{
  if (degree < 0)
    throw DomainError("monomial: negative degree");
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int i) const
{
  if (i < 0 || i > degree())
    return 0;
  return coeffs_[i];
}

const mpz_class &IntPolynomial::leading() const
{
  if (is_zero())
    throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class IntPolynomial::content() const
{
  mpz_class g = 0;
  for (const auto &c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const
{
  if (is_zero())
    return {};
  mpz_class g = content();
  if (leading() < 0)
    g = -g;
  std::vector<mpz_class> v(coeffs_);
  for (auto &c : v)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const
{
  if (degree() < 1)
    return {};
  std::vector<mpz_class> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const
{
  std::vector<mpz_class> v(coeffs_);
  for (auto &c : v)
    c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial &IntPolynomial::operator+=(const IntPolynomial &rhs)
{
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial &IntPolynomial::operator-=(const IntPolynomial &rhs)
{
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial &IntPolynomial::operator*=(const IntPolynomial &rhs)
{
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

std::string IntPolynomial::to_string() const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class &c = coeffs_[i];
    if (c == 0)
      continue;
    mpz_class mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0)
        os << "*";
    }
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const IntPolynomial &f)
{
  return os << f.to_string();
}

PolyDivision divide_by_monic(const IntPolynomial &f, const IntPolynomial &monic)
{
  if (monic.is_zero() || monic.leading() != 1)
    throw DomainError("divide_by_monic: divisor must be monic");
  int dg = monic.degree();
  if (f.degree() < dg)
    return {IntPolynomial{}, f};

  std::vector<mpz_class> r(f.coeffs());
  std::vector<mpz_class> q(f.degree() - dg + 1);
  for (int i = f.degree(); i >= dg; --i) {
    mpz_class c = r[i];
    q[i - dg] = c;
    if (c == 0)
      continue;
    for (int j = 0; j <= dg; ++j)
      mpz_submul(r[i - dg + j].get_mpz_t(), c.get_mpz_t(), monic.coeffs()[j].get_mpz_t());
  }
  r.resize(dg);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

PolyDivision divide_by_linear(const IntPolynomial &f, const mpz_class &r)
{
  if (f.degree() < 1)
    return {IntPolynomial{}, f};
  int d = f.degree();
  std::vector<mpz_class> q(d);
  mpz_class acc = 0;
  for (int i = d; i >= 1; --i) {
    acc = acc * r + f.coeffs()[i];
    q[i - 1] = acc;
  }
  acc = acc * r + f.coeffs()[0];
  return {IntPolynomial(std::move(q)), IntPolynomial({acc})};
}

mpz_class poly_eval(const IntPolynomial &f, const mpz_class &x)
{
  mpz_class acc = 0;
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * x + f.coeffs()[i];
  return acc;
}

IntPolynomial build_f1n(long n)
{
  if (n < 2)
    throw DomainError("build_f1n: n must be >= 2");
  // Coefficient of x^{n-k} is k.
  std::vector<mpz_class> v(n);
  for (long k = 1; k <= n; ++k)
    v[n - k] = k;
  return IntPolynomial(std::move(v));
}

IntPolynomial build_g1n(long n)
{
  if (n < 2)
    throw DomainError("build_g1n: n must be >= 2");
  std::vector<mpz_class> v(n + 1, mpz_class(1));
  v[0] = -n;
  return IntPolynomial(std::move(v));
}

IntPolynomial build_mf1n(long m, long n)
{
  if (m < 2 || n < 3)
    throw DomainError("build_mf1n: requires m >= 2 and n >= 3");
  std::vector<mpz_class> v(n);
  for (long i = -1; i <= n - 2; ++i)
    v[n - 2 - i] = binomial(m + i, i + 1);
  return IntPolynomial(std::move(v));
}

DigitExpansion expand_digits(const mpz_class &base, const mpz_class &value)
{
  if (base < 2)
    throw DomainError("expand_digits: base must be >= 2");
  if (value < 1)
    throw DomainError("expand_digits: value must be >= 1");
  if (mpz_divisible_p(value.get_mpz_t(), base.get_mpz_t()))
    throw DomainError("expand_digits: base divides value");

  DigitExpansion e{base, {}, value};
  mpz_class rest = value;
  while (rest > 0) {
    mpz_class digit;
    mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    e.digits.push_back(digit);
  }
  return e;
}

IntPolynomial digit_polynomial(const DigitExpansion &e)
{
  return IntPolynomial(e.digits);
}

IntPolynomial build_fpN(const mpz_class &p, const mpz_class &N)
{
  DigitExpansion e = expand_digits(p, N);
  IntPolynomial numerator = digit_polynomial(e) - IntPolynomial({N});
  PolyDivision qr = divide_by_linear(numerator, p);
  if (!qr.remainder.is_zero())
    throw InvariantViolation("build_fpN: x - p does not divide the digit polynomial");
  return qr.quotient;
}

IntPolynomial shift_by_one(const IntPolynomial &f)
{
  std::vector<mpz_class> c(f.coeffs());
  int d = f.degree();
  // Taylor shift: after pass i, c[i..] hold the coefficients of f(x+1) from degree i up.
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j)
      c[j] += c[j + 1];
  }
  return IntPolynomial(std::move(c));
}

bool binom_identity_check(long n, long k)
{
  if (n < 1 || k < 1 || k > n)
    throw DomainError("binom_identity_check: requires 1 <= k <= n");
  mpz_class rhs = 0;
  for (long j = 1; j <= k + 1; ++j)
    rhs += binomial(n - j, k - j) * j;
  return binomial(n + 1, k - 1) == rhs;
}

} // namespace nacf
