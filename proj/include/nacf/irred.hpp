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

#ifndef NACF_IRRED_HPP
#define NACF_IRRED_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nacf/arith.hpp"
#include "nacf/polyz.hpp"

namespace nacf {

enum class CertificateKind {
  EisensteinShift, ///< Eisenstein at n+1 applied to f(x+1)
  PrimeN,          ///< n prime
  PrimePowerN,     ///< n = p^k with k >= 2
  DegreeSetSieve,  ///< factor-degree patterns mod unramified primes
  QuadraticDisc,   ///< degree 2 with a non-square discriminant
  RationalRoot,    ///< explicit linear factor, proves reducibility
  None,
};

enum class Verdict { Irreducible, Unknown, Reducible };

std::string to_string(CertificateKind k);
std::string to_string(Verdict v);

struct IrreducibilityCertificate {
  CertificateKind kind = CertificateKind::None;
  Verdict verdict = Verdict::Unknown;
  /// Every theoretical certificate that applies, strongest first.
  std::vector<CertificateKind> applicable;

  u64 shift_prime = 0;    ///< EisensteinShift
  u64 base_prime = 0;     ///< PrimeN, PrimePowerN
  int base_exponent = 0;  ///< PrimePowerN

  /// DegreeSetSieve: primes whose patterns were intersected, and the
  /// surviving achievable degrees (always contains 0 and deg f).
  std::vector<u64> witness_primes;
  std::vector<int> surviving_degrees;
  int primes_tried = 0;
};

/// Proof-backed certificate for f_{1,n}. The Eisenstein condition is checked
/// on the actual coefficients of f_{1,n}(x+1) before it is reported.
IrreducibilityCertificate theoretical_certificate(long n);

/// Intersects factor-degree subset sums over the first `prime_budget`
/// primes p with p not dividing the leading coefficient and f squarefree
/// mod p. Stops as soon as only {0, deg f} survives.
IrreducibilityCertificate degree_set_sieve(const IntPolynomial &f, int prime_budget);

/// Same, over an explicit prime list; ramified primes in it are skipped.
IrreducibilityCertificate degree_set_sieve(const IntPolynomial &f, const std::vector<u64> &primes);

/// A rational root of f, if any. Returns nullopt when none exists or when
/// the candidate set cannot be enumerated (incomplete factorization or more
/// than `max_candidates` candidates).
std::optional<mpq_class> find_rational_root(const IntPolynomial &f, std::size_t max_candidates = 200000);

struct ScanRow {
  long n = 0;
  int degree = 0;
  mpz_class content;                  ///< content of the scanned polynomial
  CertificateKind kind = CertificateKind::None;
  Verdict verdict = Verdict::Unknown;
  IrreducibilityCertificate theory;   ///< only for the f_{1,n} family
  IrreducibilityCertificate sieve;
  std::optional<mpz_class> quadratic_disc; ///< QuadraticDisc
  std::optional<mpq_class> rational_root;  ///< RationalRoot
};

/// Irreducibility of f_{1,n} (m absent) or of m f_{1,n}, one row per n.
/// The sieve runs on every row, theoretical certificates only when m is
/// absent. Reducible is reported only with an explicit rational root.
std::vector<ScanRow> conjecture_scan(long n_lo, long n_hi, std::optional<long> m, int prime_budget,
                                     unsigned threads = 1);

} // namespace nacf

#endif // NACF_IRRED_HPP
