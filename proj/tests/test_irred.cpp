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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nacf/error.hpp"
#include "nacf/irred.hpp"
#include "nacf/polyz.hpp"
#include "oracles.hpp"

using namespace nacf;

namespace {

// Coefficients of f(x+1) by direct binomial expansion.
std::vector<mpz_class> shifted(const IntPolynomial &f)
{
  std::vector<mpz_class> out(f.degree() + 1, 0);
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j <= i; ++j)
      out[j] += f.coeff(i) * binomial(i, j);
  return out;
}

std::set<int> brute_subset_sums(const std::vector<int> &parts)
{
  std::set<int> s{0};
  for (int p : parts) {
    std::set<int> next = s;
    for (int v : s)
      next.insert(v + p);
    s = next;
  }
  return s;
}

// Intersection of achievable degrees recomputed with the brute-force oracle.
std::set<int> oracle_intersection(const IntPolynomial &f, const std::vector<u64> &primes)
{
  std::set<int> acc;
  for (int i = 0; i <= f.degree(); ++i)
    acc.insert(i);
  for (u64 p : primes) {
    oracle::SmallPoly g;
    for (const auto &c : f.coeffs()) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
      g.push_back(r.get_si());
    }
    auto ct = oracle::brute_cycle_type(g, static_cast<long>(p));
    REQUIRE(ct.has_value());
    std::set<int> s = brute_subset_sums(*ct), keep;
    std::set_intersection(acc.begin(), acc.end(), s.begin(), s.end(), std::inserter(keep, keep.end()));
    acc = keep;
  }
  return acc;
}

} // namespace

TEST_CASE("theoretical certificates")
{
  auto c4 = theoretical_certificate(4);
  CHECK(c4.kind == CertificateKind::EisensteinShift);
  CHECK(c4.verdict == Verdict::Irreducible);
  CHECK(c4.shift_prime == 5);
  CHECK(c4.applicable == std::vector{CertificateKind::EisensteinShift, CertificateKind::PrimePowerN});
  CHECK(shifted(build_f1n(4)) == std::vector<mpz_class>{10, 10, 5, 1});

  auto c7 = theoretical_certificate(7);
  CHECK(c7.kind == CertificateKind::PrimeN);
  CHECK(c7.base_prime == 7);

  auto c9 = theoretical_certificate(9);
  CHECK(c9.kind == CertificateKind::PrimePowerN);
  CHECK(c9.base_prime == 3);
  CHECK(c9.base_exponent == 2);

  auto c2 = theoretical_certificate(2);
  CHECK(c2.applicable == std::vector{CertificateKind::EisensteinShift, CertificateKind::PrimeN});

  auto c14 = theoretical_certificate(14);
  CHECK(c14.kind == CertificateKind::None);
  CHECK(c14.verdict == Verdict::Unknown);
  CHECK(c14.applicable.empty());

  CHECK_THROWS_AS(theoretical_certificate(1), DomainError);
}

TEST_CASE("Eisenstein data agrees with the binomial oracle")
{
  for (long n = 2; n <= 200; ++n) {
    auto cert = theoretical_certificate(n);
    bool eis = !cert.applicable.empty() && cert.applicable.front() == CertificateKind::EisensteinShift;
    CHECK(eis == is_prime_u64(n + 1));
    CHECK((cert.kind == CertificateKind::None) == (cert.verdict == Verdict::Unknown));
    if (!eis)
      continue;
    auto s = shifted(build_f1n(n));
    mpz_class q = n + 1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      CHECK(s[i] % q == 0);
    CHECK(s[0] % (q * q) != 0);
    CHECK(s.back() == 1);
  }
}

TEST_CASE("degree-set sieve examples")
{
  auto a = degree_set_sieve(build_f1n(5), std::vector<u64>{7});
  CHECK(a.kind == CertificateKind::DegreeSetSieve);
  CHECK(a.verdict == Verdict::Irreducible);
  CHECK(a.witness_primes == std::vector<u64>{7});
  CHECK(a.surviving_degrees == std::vector<int>{0, 4});

  auto b = degree_set_sieve(build_f1n(4), std::vector<u64>{3});
  CHECK(b.verdict == Verdict::Irreducible);
  CHECK(b.surviving_degrees == std::vector<int>{0, 3});

  IntPolynomial x4p1{1, 0, 0, 0, 1};
  for (int budget : {1, 10, 200}) {
    auto c = degree_set_sieve(x4p1, budget);
    CHECK(c.verdict == Verdict::Unknown);
    CHECK(c.kind == CertificateKind::None);
    CHECK(c.surviving_degrees == std::vector<int>{0, 2, 4});
  }
  auto d = degree_set_sieve(IntPolynomial{1, 0, 1} * IntPolynomial{2, 0, 1}, 200);
  CHECK(d.verdict == Verdict::Unknown);
  CHECK(std::find(d.surviving_degrees.begin(), d.surviving_degrees.end(), 2) != d.surviving_degrees.end());

  // Only ramified primes: nothing usable.
  auto e = degree_set_sieve(IntPolynomial{-2, 0, 1}, std::vector<u64>{2});
  CHECK(e.verdict == Verdict::Unknown);
  CHECK(e.primes_tried == 0);

  CHECK_THROWS_AS(degree_set_sieve(IntPolynomial{2, 0, 2}, 10), DomainError);
  CHECK_THROWS_AS(degree_set_sieve(IntPolynomial{2, 1}, 10), DomainError);
  CHECK_THROWS_AS(degree_set_sieve(build_f1n(5), std::vector<u64>{9}), DomainError);
}

TEST_CASE("sieve witnesses replay under the brute-force oracle")
{
  for (long n = 3; n <= 9; ++n) {
    IntPolynomial f = build_f1n(n);
    auto cert = degree_set_sieve(f, 200);
    REQUIRE(cert.verdict == Verdict::Irreducible);
    bool small = true;
    for (u64 p : cert.witness_primes) {
      double work = std::pow(static_cast<double>(p), (f.degree()) / 2.0);
      small = small && work < 2e6;
    }
    if (small)
      CHECK(oracle_intersection(f, cert.witness_primes) == std::set<int>{0, f.degree()});
    auto again = degree_set_sieve(f, cert.witness_primes);
    CHECK(again.verdict == Verdict::Irreducible);
    CHECK(again.surviving_degrees == std::vector<int>{0, f.degree()});
  }
}

TEST_CASE("sieve never certifies a product")
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    auto random_poly = [&] {
      int d = deg(rng);
      std::vector<mpz_class> c(d + 1);
      for (auto &v : c)
        v = coef(rng);
      c[d] = 1 + (coef(rng) % 3 + 3) % 3;
      return IntPolynomial(c);
    };
    IntPolynomial f = random_poly() * random_poly();
    f = f.primitive_part();
    auto cert = degree_set_sieve(f, 100);
    CHECK(cert.verdict == Verdict::Unknown);
  }
}

TEST_CASE("rational roots")
{
  auto r = find_rational_root(IntPolynomial{-3, 2} * IntPolynomial{1, 0, 1});
  REQUIRE(r.has_value());
  CHECK(*r == mpq_class(3, 2));
  CHECK(!find_rational_root(IntPolynomial{-2, 0, 1}).has_value());
  auto z = find_rational_root(IntPolynomial{0, 0, 0, 1});
  REQUIRE(z.has_value());
  CHECK(*z == 0);
  auto neg = find_rational_root(IntPolynomial{6, 5, 1});
  REQUIRE(neg.has_value());
  CHECK(*neg < 0);
  CHECK(*find_rational_root(build_f1n(2)) == -2);
  for (long n = 3; n <= 40; ++n)
    CHECK(!find_rational_root(build_f1n(n)).has_value());
}

TEST_CASE("conjecture scan")
{
  auto rows = conjecture_scan(2, 30, std::nullopt, 200);
  REQUIRE(rows.size() == 29);
  for (const auto &row : rows) {
    CHECK_MESSAGE(row.verdict == Verdict::Irreducible, "n = " << row.n);
    CHECK(row.kind != CertificateKind::None);
    CHECK(row.degree == row.n - 1);
  }
  CHECK(rows[2].kind == CertificateKind::EisensteinShift); // n = 4
  CHECK(rows[12].kind == CertificateKind::DegreeSetSieve); // n = 14

  auto q = conjecture_scan(3, 3, 2L, 200);
  REQUIRE(q.size() == 1);
  CHECK(q[0].verdict == Verdict::Irreducible);
  CHECK(q[0].kind == CertificateKind::QuadraticDisc);
  REQUIRE(q[0].quadratic_disc.has_value());
  CHECK(*q[0].quadratic_disc == -8);

  auto c = conjecture_scan(4, 4, 2L, 50);
  CHECK(c[0].verdict == Verdict::Irreducible);
  CHECK(c[0].kind == CertificateKind::DegreeSetSieve);

  CHECK_THROWS_AS(conjecture_scan(2, 4, 3L, 10), DomainError);
  CHECK_THROWS_AS(conjecture_scan(3, 4, 1L, 10), DomainError);

  auto serial = conjecture_scan(3, 60, 3L, 200, 1);
  auto par = conjecture_scan(3, 60, 3L, 200, 4);
  REQUIRE(serial.size() == par.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].verdict == par[i].verdict);
    CHECK(serial[i].sieve.witness_primes == par[i].sieve.witness_primes);
  }

  // Quadratic discriminant -m(m+2) for every m.
  for (long m = 2; m <= 30; ++m) {
    auto r = conjecture_scan(3, 3, m, 10);
    REQUIRE(r[0].quadratic_disc.has_value());
    CHECK(*r[0].quadratic_disc * r[0].content * r[0].content == -m * (m + 2));
  }

  CHECK_THROWS_AS(conjecture_scan(1, 5, std::nullopt, 10), DomainError);
  CHECK_THROWS_AS(conjecture_scan(5, 4, std::nullopt, 10), DomainError);
}
