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
#include <numeric>
#include <set>

#include "nacf/discrim.hpp"
#include "nacf/error.hpp"
#include "nacf/galois.hpp"

using namespace nacf;

namespace {

CycleType ct(std::vector<int> parts)
{
  CycleType c;
  std::sort(parts.begin(), parts.end());
  c.degrees = std::move(parts);
  return c;
}

// Distribution by running through all d! permutations.
CycleDistribution brute_distribution(int d, bool alternating)
{
  std::vector<int> im(d);
  std::iota(im.begin(), im.end(), 0);
  std::map<CycleType, long> counts;
  long total = 0;
  do {
    Permutation p(im);
    if (alternating && !p.is_even())
      continue;
    ++counts[p.cycle_type()];
    ++total;
  } while (std::next_permutation(im.begin(), im.end()));
  CycleDistribution out;
  for (const auto &[c, k] : counts)
    out[c] = mpq_class(k, total);
  for (auto &[c, q] : out)
    q.canonicalize();
  return out;
}

// All maps x -> (ax+b)/(cx+d) with ad - bc != 0 over F_5.
std::set<std::vector<int>> brute_pgl2_5(bool special)
{
  std::set<std::vector<int>> out;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          int det = ((a * d - b * c) % 5 + 5) % 5;
          if (det == 0)
            continue;
          if (special && det != 1 && det != 4)
            continue; // determinant must be a square
          std::vector<int> im(6);
          for (int x = 0; x <= 5; ++x) {
            int num = x == 5 ? a : (a * x + b) % 5;
            int den = x == 5 ? c : (c * x + d) % 5;
            if (den == 0) {
              im[x] = 5;
              continue;
            }
            int inv = 1;
            while (den * inv % 5 != 1)
              ++inv;
            im[x] = num * inv % 5;
          }
          out.insert(im);
        }
  return out;
}

std::vector<Permutation> symmetric_generators(int d)
{
  std::vector<int> cyc(d);
  std::iota(cyc.begin(), cyc.end(), 0);
  if (d == 1)
    return {Permutation::identity(1)};
  return {Permutation::from_cycles(d, {{0, 1}}), Permutation::from_cycles(d, {cyc})};
}

std::vector<Permutation> alternating_generators(int d)
{
  std::vector<Permutation> gens;
  for (int i = 2; i < d; ++i)
    gens.push_back(Permutation::from_cycles(d, {{0, 1, i}}));
  return gens;
}

} // namespace

TEST_CASE("permutations")
{
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), DomainError);
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * b).images() == std::vector<int>{0, 2, 1});
  CHECK((b * b.inverse()) == Permutation::identity(3));
  CHECK(b.cycle_type() == ct({3}));
  CHECK(a.cycle_type() == ct({1, 2}));
  CHECK(!a.is_even());
  CHECK(b.is_even());
  CHECK(b.to_string() == "(0 1 2)");
  CHECK(Permutation::identity(4).to_string() == "()");
  Permutation c = Permutation::from_cycles(4, {{0, 1}, {1, 2}});
  CHECK(c == Permutation::from_cycles(4, {{0, 1}}) * Permutation::from_cycles(4, {{1, 2}}));
  CHECK_THROWS_AS(a * Permutation::identity(4), DomainError);
}

TEST_CASE("group closure examples")
{
  PermGroup s3 = group_closure({Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(s3.order == 6);
  CHECK(s3.cycle_type_distribution.at(ct({1, 1, 1})) == mpq_class(1, 6));
  CHECK(s3.cycle_type_distribution.at(ct({1, 2})) == mpq_class(1, 2));
  CHECK(s3.cycle_type_distribution.at(ct({3})) == mpq_class(1, 3));

  CHECK(group_closure({Permutation::identity(5)}).order == 1);

  PermGroup pgl = group_closure(pgl2_5_generators());
  CHECK(pgl.order == 120);
  std::set<std::vector<int>> got;
  for (const auto &e : pgl.elements)
    got.insert(e.images());
  CHECK(got == brute_pgl2_5(false));

  // x -> x+1 and x -> 1/x alone stay inside PSL(2,5).
  PermGroup psl = group_closure(psl2_5_generators());
  CHECK(psl.order == 60);
  got.clear();
  for (const auto &e : psl.elements) {
    got.insert(e.images());
    CHECK(e.is_even());
  }
  CHECK(got == brute_pgl2_5(true));

  CHECK_THROWS_AS(group_closure({}), DomainError);
  CHECK_THROWS_AS(group_closure(symmetric_generators(9), 1000), DomainError);
  CHECK_THROWS_AS(group_closure(symmetric_generators(17)), DomainError);
  CHECK_THROWS_AS(group_closure({Permutation::identity(3), Permutation::identity(4)}), DomainError);
}

TEST_CASE("symmetric and alternating closures")
{
  for (int d = 1; d <= 7; ++d) {
    PermGroup s = group_closure(symmetric_generators(d));
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), d);
    CHECK(s.order == fac);
    CHECK(s.cycle_type_distribution == sn_an_cycle_distribution(d, false));
    if (d < 3)
      continue;
    PermGroup a = group_closure(alternating_generators(d));
    CHECK(a.order == fac / 2);
    for (const auto &e : a.elements)
      CHECK(e.is_even());
    CHECK(a.cycle_type_distribution == sn_an_cycle_distribution(d, true));
  }
}

TEST_CASE("class distributions")
{
  auto s3 = sn_an_cycle_distribution(3, false);
  CHECK(s3.size() == 3);
  CHECK(s3.at(ct({1, 1, 1})) == mpq_class(1, 6));
  CHECK(s3.at(ct({1, 2})) == mpq_class(1, 2));
  CHECK(s3.at(ct({3})) == mpq_class(1, 3));
  auto a3 = sn_an_cycle_distribution(3, true);
  CHECK(a3.size() == 2);
  CHECK(a3.at(ct({1, 1, 1})) == mpq_class(1, 3));
  CHECK(a3.at(ct({3})) == mpq_class(2, 3));
  CHECK(sn_an_cycle_distribution(4, false).at(ct({2, 2})) == mpq_class(1, 8)); // 3 of 24

  for (int d = 1; d <= 8; ++d) {
    CHECK(sn_an_cycle_distribution(d, false) == brute_distribution(d, false));
    CHECK(sn_an_cycle_distribution(d, true) == brute_distribution(d, true));
  }
  for (int d = 1; d <= 25; ++d) {
    for (bool alt : {false, true}) {
      mpq_class sum = 0;
      for (const auto &[c, w] : sn_an_cycle_distribution(d, alt)) {
        sum += w;
        CHECK(c.total() == d);
      }
      CHECK(sum == 1);
    }
  }
  CHECK(sn_an_cycle_distribution(25, false).size() == 1958);
  CHECK_THROWS_AS(sn_an_cycle_distribution(26, false), DomainError);
  CHECK_THROWS_AS(sn_an_cycle_distribution(0, false), DomainError);
}

TEST_CASE("frobenius sampling")
{
  FrobeniusSample s = frobenius_sample(build_f1n(5), 2, 11);
  CHECK(s.first_prime.at(ct({4})) == 7);
  CHECK(s.first_prime.at(ct({1, 3})) == 11);
  CHECK(s.usable + static_cast<long>(s.skipped.size()) == 5);

  FrobeniusSample t = frobenius_sample(build_f1n(4), 3, 3);
  CHECK(t.usable == 1);
  CHECK(t.samples.at(ct({3})) == 1);

  CHECK_THROWS_AS(frobenius_sample(build_f1n(5), 24, 28), DomainError);
  CHECK_THROWS_AS(frobenius_sample(build_f1n(5), 10, 2), DomainError);
  CHECK_THROWS_AS(frobenius_sample(IntPolynomial{1, 1}, 2, 100), DomainError);

  for (long n = 4; n <= 12; ++n) {
    mpz_class disc = closed_form_disc_f1n(n);
    FrobeniusSample u = frobenius_sample(build_f1n(n), 2, 3000);
    long total = 0;
    for (const auto &[c, k] : u.samples) {
      CHECK(c.total() == n - 1);
      total += k;
    }
    CHECK(total == u.usable);
    CHECK(u.usable + static_cast<long>(u.skipped.size()) == static_cast<long>(primes_in_range(2, 3000).size()));
    for (u64 p : u.skipped)
      CHECK(mpz_divisible_ui_p(disc.get_mpz_t(), p));
  }

  FrobeniusSample serial = frobenius_sample(build_f1n(15), 2, 20000, 1);
  FrobeniusSample par = frobenius_sample(build_f1n(15), 2, 20000, 4);
  CHECK(serial.samples == par.samples);
  CHECK(serial.first_prime == par.first_prime);
  CHECK(serial.skipped == par.skipped);
}

TEST_CASE("witness predicates and fit statistics")
{
  CHECK(is_transposition_witness(ct({1, 2})));
  CHECK(is_transposition_witness(ct({2, 3})));
  CHECK(is_transposition_witness(ct({1, 1, 2, 5})));
  CHECK(!is_transposition_witness(ct({1, 2, 2})));
  CHECK(!is_transposition_witness(ct({2, 4})));
  CHECK(!is_transposition_witness(ct({3})));

  CHECK(long_cycle_witness(ct({3, 5}), 8) == 5);
  CHECK(long_cycle_witness(ct({1, 7}), 8) == 0);
  CHECK(long_cycle_witness(ct({7}), 7) == 7);
  CHECK(long_cycle_witness(ct({2, 5}), 7) == 5);
  CHECK(long_cycle_witness(ct({1, 3}), 4) == 0);
  CHECK(long_cycle_witness(ct({2, 2, 4}), 8) == 0);

  auto ref = sn_an_cycle_distribution(3, false);
  std::map<CycleType, long> exact{{ct({1, 1, 1}), 1}, {ct({1, 2}), 3}, {ct({3}), 2}};
  CHECK(total_variation(exact, 6, ref) == doctest::Approx(0.0));
  CHECK(chi_square(exact, 6, ref) == doctest::Approx(0.0));
  std::map<CycleType, long> skew{{ct({3}), 6}};
  CHECK(total_variation(skew, 6, ref) == doctest::Approx(2.0 / 3));
  auto alt = sn_an_cycle_distribution(3, true);
  CHECK(std::isinf(chi_square(exact, 6, alt)));
  CHECK(total_variation(exact, 6, alt) == doctest::Approx(0.5));
}

TEST_CASE("classification examples")
{
  GaloisVerdict v4 = classify_galois(4, 2, 100000);
  CHECK(v4.kind == GaloisKind::SymmetricProved);
  CHECK(v4.group == "S3");
  CHECK(v4.proof_rule == ProofRule::PrimeDegree);
  CHECK(!v4.disc_square);
  CHECK(v4.transposition_prime.has_value());
  CHECK(v4.group_order == 6);

  GaloisVerdict v7 = classify_galois(7, 2, 100000);
  CHECK(v7.kind == GaloisKind::NamedGroupStatistical);
  CHECK(v7.group == "PGL(2,5)");
  CHECK(v7.group_order == 120);
  CHECK(v7.fits[0].total_variation < 0.05);
  CHECK(!v7.transposition_prime.has_value());

  GaloisVerdict v17 = classify_galois(17, 2, 100000);
  CHECK(v17.kind == GaloisKind::AlternatingStatistical);
  CHECK(v17.group == "A16");
  CHECK(v17.disc_square);
  CHECK(!v17.transposition_prime.has_value());

  GaloisVerdict v9 = classify_galois(9, 2, 20000);
  CHECK(v9.kind == GaloisKind::SymmetricProved);
  CHECK(v9.proof_rule == ProofRule::JordanExtension);
  CHECK(v9.long_cycle_length == 5);
}

TEST_CASE("proved verdicts survive a disjoint window")
{
  for (long n : {4L, 6L, 8L, 9L, 10L, 12L}) {
    GaloisVerdict a = classify_galois(n, 2, 20000);
    GaloisVerdict b = classify_galois(n, 20001, 60000);
    REQUIRE(a.kind == GaloisKind::SymmetricProved);
    CHECK(b.kind == GaloisKind::SymmetricProved);
    CHECK(a.group == b.group);
    CHECK(a.group_order > n - 1);
  }
}

TEST_CASE("inconclusive paths")
{
  GaloisVerdict few = classify_galois(5, 2, 50);
  CHECK(few.kind == GaloisKind::Inconclusive);
  CHECK(!few.diagnostic.empty());

  GaloisVerdict under = classify_galois(5, 2, 1000);
  CHECK(under.kind == GaloisKind::Inconclusive);
  CHECK(under.usable_primes < 500);

  GaloisOptions strict;
  strict.tie_margin = 1.0;
  GaloisVerdict tie = classify_galois(7, 2, 20000, strict);
  CHECK(tie.kind == GaloisKind::Inconclusive);

  GaloisOptions tight;
  tight.tv_threshold = 1e-6;
  CHECK(classify_galois(17, 2, 20000, tight).kind == GaloisKind::Inconclusive);

  CHECK_THROWS_AS(classify_galois(2, 2, 100), DomainError);
  CHECK(table1_expected(7) == "PGL(2,5)");
  CHECK(table1_expected(18) == "A17");
  CHECK_THROWS_AS(table1_expected(23), DomainError);
}
