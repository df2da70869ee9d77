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

#ifndef NACF_QFIELD_HPP
#define NACF_QFIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nacf/arith.hpp"

namespace nacf {

/// a + b sqrt(-2) in Z[sqrt(-2)].
struct QuadInt {
  mpz_class a;
  mpz_class b;

  mpz_class norm() const { return a * a + 2 * b * b; }
  QuadInt conj() const { return {a, -b}; }
  friend QuadInt operator*(const QuadInt &x, const QuadInt &y)
  {
    return {x.a * y.a - 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadInt &, const QuadInt &) = default;
  std::string to_string() const;
};

QuadInt pow(QuadInt z, unsigned e);

/// Principal ideal, stored by its canonical generator (a > 0, or a = 0 and
/// b > 0). The units of Z[sqrt(-2)] are +-1.
class QuadIdeal {
public:
  explicit QuadIdeal(const QuadInt &z); ///< throws DomainError on zero
  const QuadInt &generator() const { return gen_; }
  mpz_class norm() const { return gen_.norm(); }
  friend bool operator==(const QuadIdeal &, const QuadIdeal &) = default;

private:
  QuadInt gen_;
};

/// Ideals of norm n, conjugates listed separately, ordered by b descending.
std::vector<QuadIdeal> ideals_of_norm(long n);

/// True when z lies in the ideal (5 sqrt(-2)), i.e. 10 | a and 5 | b.
bool in_modulus(const QuadInt &z);

/// Membership of (z) in H, as the reduced test 5 | ab. Requires
/// gcd(N(z), 50) = 1, else DomainError.
bool h_membership(const QuadInt &z);

/// The same set written as a union: z = l (mod m) for an integer l, or
/// ab sqrt(-2) = 0 (mod m); either generator of (z) may witness.
bool h_membership_union(const QuadInt &z);

struct RayClassContext {
  QuadIdeal modulus{QuadInt{0, 5}};
  int group_order = 3;
  QuadIdeal generator_class{QuadInt{1, 1}};
};

/// The unique t in {0,1,2} with g * (1+sqrt(-2))^{3-t} in H, where g is the
/// generator; checked on both associates. InvariantViolation if no unique t.
int ray_class(const QuadIdeal &ideal, const RayClassContext &ctx = {});

/// u + v w with w a primitive cube root of unity (w^2 = -1 - w).
struct CycloInt {
  i64 u = 0;
  i64 v = 0;

  bool is_integer() const { return v == 0; }
  friend CycloInt operator+(CycloInt x, CycloInt y) { return {x.u + y.u, x.v + y.v}; }
  friend CycloInt operator*(CycloInt x, CycloInt y)
  {
    return {x.u * y.u - x.v * y.v, x.u * y.v + x.v * y.u - x.v * y.v};
  }
  friend bool operator==(CycloInt, CycloInt) = default;
  std::string to_string() const;
};

struct HeckeCharacter {
  CycloInt omega{0, 1}; ///< value on the class of (1+sqrt(-2))
  CycloInt value(int t) const;
  CycloInt operator()(const QuadIdeal &ideal, const RayClassContext &ctx = {}) const;
};

struct ThetaSeries {
  long n_max = 0;
  std::vector<CycloInt> coeffs; ///< coeffs[n] = a(n); coeffs[0] = 0
  bool all_integral = true;

  /// a(n) as an integer; DomainError if out of range or not integral.
  i64 a(long n) const;
};

ThetaSeries theta_coefficients(long n_max);

/// Whether p splits completely in the splitting field of f_{1,4}, read off
/// from three distinct roots mod p. DomainError for p = 2, 5 or p not prime.
bool split_in_L(u64 p);

struct Representation {
  u64 x = 0;
  u64 y = 0;
};

struct RepReport {
  u64 p = 0;
  std::vector<Representation> reps; ///< x, y >= 0 with p = x^2 + 2y^2
  bool fifteen = false;             ///< some rep has 15 | xy
};

RepReport rep_x2_2y2(u64 p);

struct Thm51Violation {
  u64 p = 0;
  bool split = false;
  bool fifteen = false;
  i64 a_p = 0;
};

struct Thm51Report {
  u64 p_max = 0;
  long checked = 0;
  long split_count = 0;
  std::vector<Thm51Violation> violations;
};

/// Split in L, representation with 15 | xy, and a(p) = 2 agree for every
/// prime p <= p_max other than 2 and 5.
Thm51Report theorem51_equivalence(u64 p_max);

struct FactReport {
  long checked = 0;
  std::vector<std::string> violations;
};

/// 3 | xy for every representation p = x^2 + 2y^2 of a prime 3 < p <= p_max.
FactReport fact_xy_mod3(u64 p_max);

/// 5 | XY where (a + b sqrt(-2))^3 = X + Y sqrt(-2), for |a|, |b| <= range.
FactReport fact_cube_mod5(long range);

/// Coefficients c[0..n_max] of eta(a tau) eta(b tau) for a + b = 24, that is
/// q * prod (1 - q^{an}) (1 - q^{bn}), from pentagonal exponents k(3k-1)/2.
std::vector<i64> eta_product_expansion(long a, long b, long n_max);

struct EtaMismatch {
  long a = 0;
  long b = 0;
  std::optional<long> first_mismatch; ///< smallest n with c(n) != a(n)
  i64 eta_coeff = 0;
  i64 theta_coeff = 0;
  long solutions_12p = 0; ///< a(6n-1)^2 + b(6m-1)^2 = 12p over split p <= n_max
  long solutions_24p = 0; ///< same with 24p
};

/// Every pair 1 <= a <= b with a + b = 24 against theta up to n_max.
std::vector<EtaMismatch> eta_product_mismatch(long n_max);

} // namespace nacf

#endif // NACF_QFIELD_HPP
