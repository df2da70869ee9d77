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

#include "nacf/error.hpp"
#include "nacf/modp.hpp"
#include "oracles.hpp"

using namespace nacf;

namespace {

ModPolynomial mp(u64 p, std::vector<u64> c)
{
  return ModPolynomial(PrimeModulus(p), std::move(c));
}

std::vector<int> degs(const ModPolynomial &f)
{
  CycleType ct = factor_cycle_type(f);
  REQUIRE(ct.squarefree);
  return ct.degrees;
}

} // namespace

TEST_CASE("PrimeModulus certifies primality")
{
  CHECK(PrimeModulus(2).value() == 2);
  CHECK(PrimeModulus(1000000007).value() == 1000000007);
  CHECK(PrimeModulus(9223372036854775783ull).value() == 9223372036854775783ull);
  CHECK_THROWS_AS(PrimeModulus(1), DomainError);
  CHECK_THROWS_AS(PrimeModulus(91), DomainError);
  CHECK_THROWS_AS(PrimeModulus(3215031751ull), DomainError); // strong pseudoprime to 2,3,5,7
}

TEST_CASE("reduce_mod_p")
{
  CHECK(reduce_mod_p(build_f1n(5), PrimeModulus(7)) == mp(7, {5, 4, 3, 2, 1}));
  CHECK(reduce_mod_p(build_f1n(4), PrimeModulus(3)) == mp(3, {1, 0, 2, 1}));
  CHECK(reduce_mod_p(build_f1n(4), PrimeModulus(2)) == mp(2, {0, 1, 0, 1}));
  CHECK(reduce_mod_p(IntPolynomial({-1, 0, 1}), PrimeModulus(5)) == mp(5, {4, 0, 1}));
  // Leading coefficient divisible by p drops the degree.
  CHECK(reduce_mod_p(IntPolynomial({1, 1, 5}), PrimeModulus(5)).degree() == 1);
}

TEST_CASE("factor_cycle_type examples")
{
  CHECK(degs(reduce_mod_p(build_f1n(5), PrimeModulus(11))) == std::vector<int>{1, 3});
  CHECK(degs(reduce_mod_p(build_f1n(5), PrimeModulus(7))) == std::vector<int>{4});
  CHECK(degs(reduce_mod_p(IntPolynomial({-1, 0, 1}), PrimeModulus(5))) == std::vector<int>{1, 1});
  CHECK(degs(reduce_mod_p(build_f1n(4), PrimeModulus(3))) == std::vector<int>{3});

  // (x-1)^2 is not squarefree.
  CycleType sq = factor_cycle_type(mp(7, {1, 5, 1}));
  CHECK_FALSE(sq.squarefree);
  CHECK(sq.degrees.empty());
  // x^p has zero derivative.
  CHECK_FALSE(factor_cycle_type(mp(3, {0, 0, 0, 1})).squarefree);

  CHECK_THROWS_AS(factor_cycle_type(mp(5, {})), DomainError);
  CHECK_THROWS_AS(factor_cycle_type(mp(5, {3})), DomainError);
}

TEST_CASE("is_irreducible_mod_p")
{
  CHECK(is_irreducible_mod_p(reduce_mod_p(build_f1n(5), PrimeModulus(7))));
  CHECK_FALSE(is_irreducible_mod_p(reduce_mod_p(build_f1n(5), PrimeModulus(11))));
  CHECK_FALSE(is_irreducible_mod_p(mp(5, {1, 0, 1})));
  CHECK(is_irreducible_mod_p(mp(3, {1, 0, 1})));
}

TEST_CASE("cycle types match trial division over random polynomials")
{
  std::mt19937_64 rng(424242);
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    for (int trial = 0; trial < 60; ++trial) {
      int d = 1 + static_cast<int>(rng() % 8);
      std::vector<u64> c(d + 1);
      oracle::SmallPoly s(d + 1);
      for (int i = 0; i < d; ++i)
        s[i] = static_cast<long>(c[i] = rng() % p);
      c[d] = 1;
      s[d] = 1;
      CycleType ct = factor_cycle_type(mp(p, c));
      auto brute = oracle::brute_cycle_type(s, static_cast<long>(p));
      REQUIRE(ct.squarefree == brute.has_value());
      if (brute) {
        REQUIRE(ct.degrees == *brute);
        REQUIRE(ct.total() == d);
      }
    }
  }
}

TEST_CASE("large-degree path agrees with small-degree path via products")
{
  // Product of f_{1,5}-like factors; compare the Frobenius matrix route
  // (degree > 32) against the union of the factors' cycle types.
  std::mt19937_64 rng(99);
  for (u64 p : {101, 1009, 65537}) {
    PrimeModulus P(p);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> expected;
      IntPolynomial prod({1});
      while (prod.degree() <= 40) {
        std::vector<mpz_class> c(2 + rng() % 12);
        for (auto &v : c)
          v = static_cast<unsigned long>(rng() % p);
        c.back() = 1;
        IntPolynomial g(c);
        CycleType part = factor_cycle_type(reduce_mod_p(g, P));
        expected.insert(expected.end(), part.degrees.begin(), part.degrees.end());
        prod *= g;
      }
      ModPolynomial big = reduce_mod_p(prod, P);
      if (!is_squarefree_mod_p(big))
        continue;
      std::sort(expected.begin(), expected.end());
      CycleType whole = factor_cycle_type(big);
      REQUIRE(whole.squarefree);
      REQUIRE(whole.degrees == expected);
    }
  }
  // Degree 40 product of known shapes: x^40 - 1 over F_41 splits into linears.
  std::vector<u64> c(41, 0);
  c[0] = 40;
  c[40] = 1;
  CHECK(factor_cycle_type(mp(41, c)).degrees == std::vector<int>(40, 1));
  // x^81 - x over F_3 is the product of all monic irreducibles of degree 1, 2, 4:
  // 3 linears, 3 quadratics, 18 quartics.
  std::vector<u64> e(82, 0);
  e[1] = 2;
  e[81] = 1;
  CycleType all = factor_cycle_type(mp(3, e));
  CHECK(all.count(1) == 3);
  CHECK(all.count(2) == 3);
  CHECK(all.count(4) == 18);
}

TEST_CASE("Dedekind consistency: unramified reductions of f_{1,n} are squarefree")
{
  for (long n = 3; n <= 40; ++n) {
    IntPolynomial f = build_f1n(n);
    for (u64 p : primes_in_range(2, 300)) {
      // disc = +-2 n^{n-3} (n+1)^{n-2}
      bool ramified = p == 2 || n % static_cast<long>(p) == 0 || (n + 1) % static_cast<long>(p) == 0;
      if (ramified)
        continue;
      CycleType ct = factor_cycle_type(reduce_mod_p(f, PrimeModulus(p)));
      REQUIRE(ct.squarefree);
      REQUIRE(ct.total() == n - 1);
    }
  }
}
