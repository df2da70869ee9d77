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

#ifndef NACF_POLYZ_HPP
#define NACF_POLYZ_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nacf {

/**
 * Dense polynomial over the integers, coefficients in ascending degree.
 *
 * The coefficient vector is kept trimmed, so the leading coefficient is
 * nonzero unless the polynomial is zero (empty vector, degree -1). Content
 * is never divided out implicitly; use primitive_part() for that.
 */
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const mpz_class &c, int degree);
  static IntPolynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class> &coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero outside the stored range.
  mpz_class coeff(int i) const;
  const mpz_class &leading() const;

  mpz_class content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  IntPolynomial operator-() const;
  IntPolynomial &operator+=(const IntPolynomial &rhs);
  IntPolynomial &operator-=(const IntPolynomial &rhs);
  IntPolynomial &operator*=(const IntPolynomial &rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial &b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial &b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial &b) { return a *= b; }
  friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, descending powers: "x^3 + 2*x^2 + 3*x + 4".
  std::string to_string() const;

private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const IntPolynomial &f);

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division by a monic divisor; exact over the integers.
PolyDivision divide_by_monic(const IntPolynomial &f, const IntPolynomial &monic);

/// Synthetic division by (x - r).
PolyDivision divide_by_linear(const IntPolynomial &f, const mpz_class &r);

/// Horner evaluation.
mpz_class poly_eval(const IntPolynomial &f, const mpz_class &x);

/// f_{1,n}(x) = x^{n-1} + 2x^{n-2} + ... + (n-1)x + n, n >= 2.
IntPolynomial build_f1n(long n);

/// g_{1,n}(x) = x^n + x^{n-1} + ... + x - n = (x-1) f_{1,n}(x), n >= 2.
IntPolynomial build_g1n(long n);

/// Generalized family with coefficient C(m+i, i+1) on x^{n-2-i}, i = -1..n-2.
/// Requires m >= 2, n >= 3.
IntPolynomial build_mf1n(long m, long n);

/// Base-`base` digits of a value not divisible by the base.
struct DigitExpansion {
  mpz_class base;
  std::vector<mpz_class> digits; ///< a_0 .. a_n, a_0 != 0 and a_n != 0
  mpz_class value;
};

DigitExpansion expand_digits(const mpz_class &base, const mpz_class &value);

/// sum a_i x^i for the digits of `e`.
IntPolynomial digit_polynomial(const DigitExpansion &e);

/// (sum a_i x^i - N) / (x - p); the division is exact by construction.
IntPolynomial build_fpN(const mpz_class &p, const mpz_class &N);

/// f(x + 1), by repeated synthetic (Taylor) shifting.
IntPolynomial shift_by_one(const IntPolynomial &f);

/// Checks C(n+1, k-1) == sum_{j=1}^{k+1} j * C(n-j, k-j), binomials with a
/// negative lower index being zero. Requires n >= 1 and 1 <= k <= n.
bool binom_identity_check(long n, long k);

} // namespace nacf

#endif // NACF_POLYZ_HPP
