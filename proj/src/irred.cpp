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

#include "nacf/irred.hpp"

#include <algorithm>

#include "nacf/discrim.hpp"
#include "nacf/error.hpp"
#include "nacf/modp.hpp"
#include "nacf/parallel.hpp"

namespace nacf {

std::string to_string(CertificateKind k)
{
  switch (k) {
  case CertificateKind::EisensteinShift: return "EisensteinShift";
  case CertificateKind::PrimeN: return "PrimeN";
  case CertificateKind::PrimePowerN: return "PrimePowerN";
  case CertificateKind::DegreeSetSieve: return "DegreeSetSieve";
  case CertificateKind::QuadraticDisc: return "QuadraticDisc";
  case CertificateKind::RationalRoot: return "RationalRoot";
  case CertificateKind::None: return "None";
  }
  return "None";
}

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Irreducible: return "Irreducible";
  case Verdict::Unknown: return "Unknown";
  case Verdict::Reducible: return "Reducible";
  }
  return "Unknown";
}

IrreducibilityCertificate theoretical_certificate(long n)
{
  if (n < 2)
    throw DomainError("theoretical_certificate: n must be >= 2");
  IrreducibilityCertificate cert;
  const u64 un = static_cast<u64>(n);

  if (is_prime_u64(un + 1)) {
    IntPolynomial s = shift_by_one(build_f1n(n));
    mpz_class q = n + 1;
    bool ok = s.leading() % q != 0 && s.coeff(0) % (q * q) != 0;
    for (int i = 0; ok && i < s.degree(); ++i)
      ok = mpz_divisible_p(s.coeff(i).get_mpz_t(), q.get_mpz_t()) != 0;
    if (!ok)
      throw InvariantViolation("Eisenstein condition fails for the shifted f_{1,n}");
    cert.applicable.push_back(CertificateKind::EisensteinShift);
    cert.shift_prime = un + 1;
  }
  auto fac = factor_u64(un);
  if (fac.size() == 1) {
    cert.base_prime = fac[0].first;
    cert.base_exponent = fac[0].second;
    cert.applicable.push_back(fac[0].second == 1 ? CertificateKind::PrimeN : CertificateKind::PrimePowerN);
  }
  if (!cert.applicable.empty()) {
    cert.kind = cert.applicable.front();
    cert.verdict = Verdict::Irreducible;
  }
  return cert;
}

namespace {

using DegreeSet = std::vector<char>;

DegreeSet subset_sums(const CycleType &ct, int deg)
{
  DegreeSet s(deg + 1, 0);
  s[0] = 1;
  for (int part : ct.degrees)
    for (int t = deg; t >= part; --t)
      if (s[t - part])
        s[t] = 1;
  return s;
}

bool only_trivial(const DegreeSet &s)
{
  return std::count(s.begin() + 1, s.end() - 1, 1) == 0;
}

// Returns true when p was usable (unramified).
bool sieve_step(const IntPolynomial &f, u64 p, DegreeSet &acc, IrreducibilityCertificate &cert)
{
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p))
    return false;
  CycleType ct = factor_cycle_type(reduce_mod_p(f, PrimeModulus(p)));
  if (!ct.squarefree)
    return false;
  ++cert.primes_tried;
  DegreeSet s = subset_sums(ct, f.degree());
  bool shrinks = false;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] && !s[i]) {
      acc[i] = 0;
      shrinks = true;
    }
  }
  if (shrinks || cert.witness_primes.empty())
    cert.witness_primes.push_back(p);
  return true;
}

void check_sieve_input(const IntPolynomial &f)
{
  if (f.degree() < 2)
    throw DomainError("degree_set_sieve: degree must be >= 2");
  if (f.content() != 1)
    throw DomainError("degree_set_sieve: polynomial must be primitive");
}

IrreducibilityCertificate finish_sieve(const DegreeSet &acc, IrreducibilityCertificate cert)
{
  cert.kind = CertificateKind::None;
  cert.verdict = Verdict::Unknown;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i])
      cert.surviving_degrees.push_back(static_cast<int>(i));
  if (cert.primes_tried > 0 && only_trivial(acc)) {
    cert.kind = CertificateKind::DegreeSetSieve;
    cert.verdict = Verdict::Irreducible;
  }
  return cert;
}

} // namespace

namespace {

// Upper bound on the number of distinct primes dividing lc(f) * disc(f),
// from Hadamard's bound on the Sylvester matrix of f and f'. Once more
// primes than this have been found ramified, f is not squarefree over Q.
long ramified_prime_bound(const IntPolynomial &f)
{
  const long d = f.degree();
  std::size_t bits = 0;
  for (const auto &c : f.coeffs())
    bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  long row_bits = static_cast<long>(bits) + 2 * (64 - __builtin_clzl(static_cast<unsigned long>(d + 1)));
  return (2 * d - 1) * row_bits + static_cast<long>(mpz_sizeinbase(f.leading().get_mpz_t(), 2)) + 1;
}

} // namespace

IrreducibilityCertificate degree_set_sieve(const IntPolynomial &f, int prime_budget)
{
  check_sieve_input(f);
  IrreducibilityCertificate cert;
  DegreeSet acc(f.degree() + 1, 1);
  const long ramified_cap = ramified_prime_bound(f);
  long ramified = 0;
  for (u64 p = 2; cert.primes_tried < prime_budget && !(cert.primes_tried > 0 && only_trivial(acc)); ++p) {
    if (!is_prime_u64(p))
      continue;
    if (!sieve_step(f, p, acc, cert) && ++ramified > ramified_cap)
      break;
  }
  return finish_sieve(acc, std::move(cert));
}

IrreducibilityCertificate degree_set_sieve(const IntPolynomial &f, const std::vector<u64> &primes)
{
  check_sieve_input(f);
  IrreducibilityCertificate cert;
  DegreeSet acc(f.degree() + 1, 1);
  for (u64 p : primes) {
    if (!is_prime_u64(p))
      throw DomainError("degree_set_sieve: " + std::to_string(p) + " is not prime");
    sieve_step(f, p, acc, cert);
    if (only_trivial(acc))
      break;
  }
  return finish_sieve(acc, std::move(cert));
}

namespace {

std::vector<mpz_class> divisors(const IntegerFactorization &fac, std::size_t cap)
{
  std::vector<mpz_class> out{1};
  for (const auto &[p, e] : fac.factors) {
    std::size_t base = out.size();
    if (base * (e + 1) > cap)
      return {};
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pk);
    }
  }
  return out;
}

} // namespace

std::optional<mpq_class> find_rational_root(const IntPolynomial &f, std::size_t max_candidates)
{
  if (f.degree() < 1)
    return std::nullopt;
  int low = 0;
  while (f.coeff(low) == 0)
    ++low;
  if (low > 0)
    return mpq_class(0);
  IntegerFactorization fa = factor_integer(f.coeff(0));
  IntegerFactorization fl = factor_integer(f.leading());
  if (!fa.complete() || !fl.complete())
    return std::nullopt;
  auto num = divisors(fa, max_candidates);
  auto den = divisors(fl, max_candidates);
  if (num.empty() || den.empty() || num.size() * den.size() > max_candidates)
    return std::nullopt;
  const int d = f.degree();
  for (const auto &t : den) {
    for (const auto &s0 : num) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), s0.get_mpz_t(), t.get_mpz_t());
      if (g != 1)
        continue;
      for (int sign : {1, -1}) {
        mpz_class s = sign * s0;
        // t^d f(s/t) = sum a_k s^k t^{d-k}
        mpz_class acc = 0;
        mpz_class tp = 1;
        for (int k = d; k >= 0; --k) {
          acc = acc * s + f.coeff(k) * tp;
          tp *= t;
        }
        if (acc == 0)
          return mpq_class(s, t);
      }
    }
  }
  return std::nullopt;
}

std::vector<ScanRow> conjecture_scan(long n_lo, long n_hi, std::optional<long> m, int prime_budget,
                                     unsigned threads)
{
  if (n_lo < 2 || n_hi < n_lo)
    throw DomainError("conjecture_scan: need 2 <= n_lo <= n_hi");
  if (m && (*m < 2 || n_lo < 3))
    throw DomainError("conjecture_scan: the m family needs m >= 2 and n >= 3");
  return parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), threads, [&](std::size_t idx) {
    ScanRow row;
    row.n = n_lo + static_cast<long>(idx);
    IntPolynomial f = m ? build_mf1n(*m, row.n) : build_f1n(row.n);
    row.degree = f.degree();
    row.content = f.content();
    IntPolynomial g = f.primitive_part();
    if (!m) {
      row.theory = theoretical_certificate(row.n);
      if (row.theory.verdict == Verdict::Irreducible) {
        row.kind = row.theory.kind;
        row.verdict = Verdict::Irreducible;
      }
    }
    if (g.degree() < 2)
      return row; // n = 2 without m, settled by the theory above
    if (row.verdict != Verdict::Irreducible && g.degree() == 2) {
      mpz_class disc = g.coeff(1) * g.coeff(1) - 4 * g.coeff(2) * g.coeff(0);
      if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) {
        row.kind = CertificateKind::QuadraticDisc;
        row.verdict = Verdict::Irreducible;
        row.quadratic_disc = disc;
      }
    }
    row.sieve = degree_set_sieve(g, prime_budget);
    if (row.verdict != Verdict::Irreducible && row.sieve.verdict == Verdict::Irreducible) {
      row.kind = CertificateKind::DegreeSetSieve;
      row.verdict = Verdict::Irreducible;
    }
    if (row.verdict != Verdict::Irreducible) {
      const auto &sd = row.sieve.surviving_degrees;
      if (std::find(sd.begin(), sd.end(), 1) != sd.end()) {
        if (auto r = find_rational_root(g)) {
          row.kind = CertificateKind::RationalRoot;
          row.verdict = Verdict::Reducible;
          row.rational_root = *r;
        }
      }
    }
    return row;
  });
}

} // namespace nacf
