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

#ifndef NACF_DISCRIM_HPP
#define NACF_DISCRIM_HPP

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nacf/polyz.hpp"

namespace nacf {

using Matrix = std::vector<std::vector<mpz_class>>;

/// Sylvester matrix of f and g, rows of f's coefficients (highest first)
/// shifted deg g times, then rows of g's shifted deg f times.
Matrix sylvester_matrix(const IntPolynomial &f, const IntPolynomial &g);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant_bareiss(Matrix m);

/// Res(f, g) as the Sylvester determinant. Both must be nonzero.
mpz_class resultant(const IntPolynomial &f, const IntPolynomial &g);

using PrimePowers = std::vector<std::pair<mpz_class, int>>;

struct IntegerFactorization {
  int sign = 1;
  PrimePowers factors;          ///< ascending primes
  mpz_class unfactored = 1;     ///< composite cofactor left over, 1 when complete
  bool complete() const { return unfactored == 1; }
};

/// Trial division to `trial_bound`, then perfect-power detection and
/// Pollard-Brent rho with a bounded step budget on what is left.
IntegerFactorization factor_integer(const mpz_class &n, unsigned long trial_bound = 1000000);

/// Squarefree part d of n (sign carried) with n = square * d, computed from
/// a factorization. An unfactored cofactor is taken as squarefree.
mpz_class squarefree_part(const IntegerFactorization &fac);

struct DiscriminantReport {
  mpz_class disc;
  IntegerFactorization factorization;
  mpz_class squarefree_part;
  bool is_square = false;
  /// Radicand d of Q(sqrt d); empty when the discriminant is a square.
  std::optional<mpz_class> quad_field;
  /// False when a cofactor resisted factoring; squarefree_part is then provisional.
  bool factorization_complete = true;
};

DiscriminantReport make_discriminant_report(const mpz_class &disc);

/// (-1)^{d(d-1)/2} Res(f, f') / lc(f); deg f >= 1.
DiscriminantReport discriminant(const IntPolynomial &f);

/// (-1)^{(n+2)(n-1)/2} * 2 * n^{n-3} * (n+1)^{n-2}, evaluated in exact
/// rationals (n = 2 has a negative exponent) and asserted integral.
mpz_class closed_form_disc_f1n(long n);

/// (-1)^{n-1} n^{n-1} (n+1)^n / 2, the resultant R(g_{1,n}, g_{1,n}').
mpz_class closed_form_resultant_g1n(long n);

/// Known discriminants of m f_{1,n}: -m(m+2) for n = 3 and
/// -m^2 (m+1)(m+2)(m+3)^2 / 6 for n = 4; empty for other n.
std::optional<mpz_class> closed_form_disc_mf1n(long m, long n);

/// Factorization of the closed form built from the factors of 2, n, n+1.
IntegerFactorization closed_form_disc_f1n_factorization(long n);

/// The four-residue-class product form of the discriminant exactly as tabulated
/// (including its n = 4l+1 row), returned as a rational.
mpq_class disc_case_table_value(long n);

struct QuadraticSubfield {
  long n = 0;
  /// Squarefree radicand; empty when the discriminant is a perfect square.
  std::optional<mpz_class> radicand;
  /// Radicand as listed in the residue-class table (-2l, 2l+1, 2l+1, -2(l+1)),
  /// before reduction, and its squarefree reduction.
  mpz_class table_radicand;
  mpz_class table_radicand_reduced;
  /// The table's field agrees with the computed one (same reduced radicand).
  bool table_agrees = false;
  /// The table's radicand is not already squarefree.
  bool table_radicand_unreduced = false;
};

/// Quadratic subfield Q(sqrt D(f_{1,n})) for n >= 3.
QuadraticSubfield quadratic_subfield(long n);

} // namespace nacf

#endif // NACF_DISCRIM_HPP
