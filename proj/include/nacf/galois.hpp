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

#ifndef NACF_GALOIS_HPP
#define NACF_GALOIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nacf/arith.hpp"
#include "nacf/irred.hpp"
#include "nacf/modp.hpp"
#include "nacf/polyz.hpp"

namespace nacf {

/// Bijection of {0, ..., d-1}.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int d);
  /// Product of disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(int d, const std::vector<std::vector<int>> &cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int> &images() const { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation &a, const Permutation &b);
  Permutation inverse() const;
  CycleType cycle_type() const;
  bool is_even() const;
  std::string to_string() const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<int> images_;
};

using CycleDistribution = std::map<CycleType, mpq_class>;

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> elements;
  mpz_class order;
  CycleDistribution cycle_type_distribution;
};

/// Breadth-first closure of the generators. Throws DomainError on mixed or
/// excessive degree (> 16), an empty generator list, or when the order
/// exceeds `order_cap`.
PermGroup group_closure(const std::vector<Permutation> &generators, std::size_t order_cap = 1000000);

/// Exact cycle-type distribution of S_d, or of A_d when `alternating`.
/// Class of shape 1^{k_1} 2^{k_2} ... has weight 1 / prod i^{k_i} k_i!.
CycleDistribution sn_an_cycle_distribution(int d, bool alternating);

/// Generators of PGL(2,5) and PSL(2,5) acting on the projective line over
/// F_5, with the point at infinity labelled 5.
std::vector<Permutation> pgl2_5_generators();
std::vector<Permutation> psl2_5_generators();

struct FrobeniusSample {
  u64 lo = 0;
  u64 hi = 0;
  std::map<CycleType, long> samples;
  std::map<CycleType, u64> first_prime; ///< smallest prime showing each type
  std::vector<u64> skipped;             ///< primes dividing lc or disc
  long usable = 0;
};

/// Cycle types of f mod every prime in [lo, hi]. Throws DomainError when the
/// window holds no prime or deg f < 2.
FrobeniusSample frobenius_sample(const IntPolynomial &f, u64 lo, u64 hi, unsigned threads = 1);

enum class GaloisKind { SymmetricProved, AlternatingStatistical, NamedGroupStatistical, Inconclusive };
enum class ProofRule { PrimeDegree, JordanExtension };

std::string to_string(GaloisKind k);
std::string to_string(ProofRule r);

struct CandidateFit {
  std::string group;
  double total_variation = 0;
  double chi_square = 0;
};

struct GaloisOptions {
  double tv_threshold = 0.05;
  long min_statistical_primes = 500;
  long min_usable_primes = 30;
  double tie_margin = 0.01;
  int sieve_budget = 200;
  unsigned threads = 1;
};

struct GaloisVerdict {
  long n = 0;
  int degree = 0;
  GaloisKind kind = GaloisKind::Inconclusive;
  std::string group;       ///< "S7", "A16", "PGL(2,5)", ...; empty when inconclusive
  mpz_class group_order;   ///< 0 when inconclusive
  std::optional<ProofRule> proof_rule;

  CertificateKind irreducibility = CertificateKind::None;
  bool disc_square = false;
  std::optional<u64> transposition_prime;
  std::optional<CycleType> transposition_shape;
  std::optional<u64> long_cycle_prime;
  int long_cycle_length = 0;

  long usable_primes = 0;
  long skipped_primes = 0;
  std::vector<CandidateFit> fits; ///< ascending total variation
  std::string diagnostic;
};

/// Transposition witness: exactly one 2-cycle and every other cycle odd, so
/// that a power of the Frobenius element is a transposition.
bool is_transposition_witness(const CycleType &ct);

/// Largest prime q with d/2 < q < d-1 occurring as a cycle length, or d
/// itself for a d-cycle when d is prime; 0 if none.
int long_cycle_witness(const CycleType &ct, int d);

double total_variation(const std::map<CycleType, long> &counts, long total, const CycleDistribution &ref);
double chi_square(const std::map<CycleType, long> &counts, long total, const CycleDistribution &ref);

/// Galois group of f_{1,n} over Q from Frobenius cycle types in [lo, hi].
GaloisVerdict classify_galois(long n, u64 lo, u64 hi, const GaloisOptions &opts = {});

struct Table1Row {
  long n = 0;
  std::string expected;
  GaloisVerdict verdict;
  bool agree = false;
};

/// Published group for f_{1,n}, 4 <= n <= 22.
std::string table1_expected(long n);

std::vector<Table1Row> verify_table1(u64 lo = 2, u64 hi = 100000, const GaloisOptions &opts = {});

} // namespace nacf

#endif // NACF_GALOIS_HPP
