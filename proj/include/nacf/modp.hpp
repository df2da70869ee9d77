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

#ifndef NACF_MODP_HPP
#define NACF_MODP_HPP

#include <compare>
#include <string>
#include <vector>

#include "nacf/arith.hpp"
#include "nacf/polyz.hpp"

namespace nacf {

/// A prime p < 2^63, certified at construction by deterministic Miller-Rabin.
class PrimeModulus {
public:
  explicit PrimeModulus(u64 p);
  u64 value() const { return p_; }
  friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
  u64 p_;
};

/// Polynomial over F_p, residues in [0, p), ascending degree, trimmed.
class ModPolynomial {
public:
  ModPolynomial(PrimeModulus p, std::vector<u64> coeffs);

  PrimeModulus modulus() const { return p_; }
  const std::vector<u64> &coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  friend bool operator==(const ModPolynomial &, const ModPolynomial &) = default;

private:
  PrimeModulus p_;
  std::vector<u64> c_;
};

/// Multiset of irreducible-factor degrees of a squarefree polynomial mod p.
/// Degrees are kept sorted ascending. When `squarefree` is false the degree
/// list is empty and carries no meaning.
struct CycleType {
  std::vector<int> degrees;
  bool squarefree = true;

  int total() const;
  /// Number of parts equal to k.
  int count(int k) const;
  std::string to_string() const;

  auto operator<=>(const CycleType &) const = default;
};

ModPolynomial reduce_mod_p(const IntPolynomial &f, PrimeModulus p);

/// Degree pattern by squarefree test plus distinct-degree factorization.
/// Throws DomainError on the zero polynomial or on degree 0.
CycleType factor_cycle_type(const ModPolynomial &f);

bool is_irreducible_mod_p(const ModPolynomial &f);

/// True iff gcd(f, f') = 1 over F_p.
bool is_squarefree_mod_p(const ModPolynomial &f);

} // namespace nacf

#endif // NACF_MODP_HPP
