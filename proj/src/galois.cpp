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

#include "nacf/galois.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "nacf/discrim.hpp"
#include "nacf/error.hpp"
#include "nacf/parallel.hpp"

namespace nacf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw DomainError("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int d)
{
  std::vector<int> im(d);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int d, const std::vector<std::vector<int>> &cycles)
{
  Permutation out = identity(d);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> im = identity(d).images_;
    for (std::size_t i = 0; i < it->size(); ++i) {
      int a = (*it)[i];
      int b = (*it)[(i + 1) % it->size()];
      if (a < 0 || a >= d || b < 0 || b >= d)
        throw DomainError("Permutation: cycle entry out of range");
      im[a] = b;
    }
    out = Permutation(std::move(im)) * out;
  }
  return out;
}

Permutation operator*(const Permutation &a, const Permutation &b)
{
  if (a.degree() != b.degree())
    throw DomainError("Permutation: degree mismatch");
  std::vector<int> im(a.degree());
  for (int i = 0; i < a.degree(); ++i)
    im[i] = a.images_[b.images_[i]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const
{
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i)
    im[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

CycleType Permutation::cycle_type() const
{
  CycleType ct;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ct.degrees.push_back(len);
  }
  std::sort(ct.degrees.begin(), ct.degrees.end());
  return ct;
}

bool Permutation::is_even() const
{
  CycleType ct = cycle_type();
  return (degree() - static_cast<int>(ct.degrees.size())) % 2 == 0;
}

std::string Permutation::to_string() const
{
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += '(';
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (j != i)
        out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup group_closure(const std::vector<Permutation> &generators, std::size_t order_cap)
{
  if (generators.empty())
    throw DomainError("group_closure: no generators");
  const int d = generators.front().degree();
  if (d < 1 || d > 16)
    throw DomainError("group_closure: degree must be in [1, 16]");
  for (const auto &g : generators)
    if (g.degree() != d)
      throw DomainError("group_closure: generators of different degree");

  auto key = [](const Permutation &p) {
    std::string k(p.images().size(), '\0');
    for (std::size_t i = 0; i < k.size(); ++i)
      k[i] = static_cast<char>(p.images()[i]);
    return k;
  };
  PermGroup g;
  g.degree = d;
  std::unordered_set<std::string> seen;
  g.elements.push_back(Permutation::identity(d));
  seen.insert(key(g.elements.front()));
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const auto &gen : generators) {
      Permutation next = gen * g.elements[head];
      if (seen.insert(key(next)).second) {
        if (g.elements.size() >= order_cap)
          throw DomainError("group_closure: order cap exceeded");
        g.elements.push_back(std::move(next));
      }
    }
  }
  g.order = static_cast<unsigned long>(g.elements.size());
  std::map<CycleType, long> counts;
  for (const auto &e : g.elements)
    ++counts[e.cycle_type()];
  for (const auto &[ct, c] : counts) {
    mpq_class w(c, g.order);
    w.canonicalize();
    g.cycle_type_distribution[ct] = w;
  }
  return g;
}

namespace {

void partitions(int remaining, int max_part, std::vector<int> &parts, std::vector<std::vector<int>> &out)
{
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    parts.push_back(k);
    partitions(remaining - k, k, parts, out);
    parts.pop_back();
  }
}

mpz_class factorial(long n)
{
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

} // namespace

CycleDistribution sn_an_cycle_distribution(int d, bool alternating)
{
  if (d < 1 || d > 25)
    throw DomainError("sn_an_cycle_distribution: d must be in [1, 25]");
  std::vector<std::vector<int>> all;
  std::vector<int> parts;
  partitions(d, d, parts, all);
  CycleDistribution out;
  for (auto &p : all) {
    bool even = (d - static_cast<int>(p.size())) % 2 == 0;
    if (alternating && !even && d > 1)
      continue;
    mpz_class den = 1;
    std::map<int, int> mult;
    for (int k : p)
      ++mult[k];
    for (auto [i, k] : mult) {
      mpz_class ip;
      mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
      den *= ip * factorial(k);
    }
    mpq_class w(1, den);
    w.canonicalize();
    if (alternating && d > 1)
      w *= 2;
    CycleType ct;
    ct.degrees.assign(p.rbegin(), p.rend());
    out[ct] = w;
  }
  return out;
}

namespace {

// Mobius map x -> (a x + b) / (c x + d) on P^1(F_5), infinity labelled 5.
Permutation mobius(int a, int b, int c, int d)
{
  std::vector<int> im(6);
  for (int x = 0; x <= 5; ++x) {
    int num, den;
    if (x == 5) {
      num = a;
      den = c;
    } else {
      num = (a * x + b) % 5;
      den = (c * x + d) % 5;
    }
    if (den == 0) {
      im[x] = 5;
    } else {
      int inv = static_cast<int>(invmod(static_cast<u64>(den), 5));
      im[x] = num * inv % 5;
    }
  }
  return Permutation(std::move(im));
}

} // namespace

std::vector<Permutation> pgl2_5_generators()
{
  return {mobius(1, 1, 0, 1), mobius(2, 0, 0, 1), mobius(0, 1, 1, 0)};
}

std::vector<Permutation> psl2_5_generators()
{
  return {mobius(1, 1, 0, 1), mobius(0, 1, 1, 0)};
}

FrobeniusSample frobenius_sample(const IntPolynomial &f, u64 lo, u64 hi, unsigned threads)
{
  if (f.degree() < 2)
    throw DomainError("frobenius_sample: degree must be >= 2");
  std::vector<u64> primes = lo <= hi ? primes_in_range(lo, hi) : std::vector<u64>{};
  if (primes.empty())
    throw DomainError("frobenius_sample: no prime in the window");
  auto types = parallel_map(primes.size(), threads, [&](std::size_t i) -> std::optional<CycleType> {
    u64 p = primes[i];
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p))
      return std::nullopt;
    CycleType ct = factor_cycle_type(reduce_mod_p(f, PrimeModulus(p)));
    if (!ct.squarefree)
      return std::nullopt;
    return ct;
  });
  FrobeniusSample s;
  s.lo = lo;
  s.hi = hi;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!types[i]) {
      s.skipped.push_back(primes[i]);
      continue;
    }
    ++s.usable;
    ++s.samples[*types[i]];
    s.first_prime.emplace(*types[i], primes[i]);
  }
  return s;
}

std::string to_string(GaloisKind k)
{
  switch (k) {
  case GaloisKind::SymmetricProved: return "SymmetricProved";
  case GaloisKind::AlternatingStatistical: return "AlternatingStatistical";
  case GaloisKind::NamedGroupStatistical: return "NamedGroupStatistical";
  case GaloisKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(ProofRule r)
{
  return r == ProofRule::PrimeDegree ? "PrimeDegree" : "JordanExtension";
}

bool is_transposition_witness(const CycleType &ct)
{
  if (!ct.squarefree || ct.count(2) != 1)
    return false;
  return std::all_of(ct.degrees.begin(), ct.degrees.end(), [](int k) { return k == 2 || k % 2 == 1; });
}

int long_cycle_witness(const CycleType &ct, int d)
{
  if (!ct.squarefree)
    return 0;
  if (is_prime_u64(static_cast<u64>(d)) && ct.degrees == std::vector<int>{d})
    return d;
  int best = 0;
  for (int q : ct.degrees)
    if (2 * q > d && q < d - 1 && is_prime_u64(static_cast<u64>(q)))
      best = std::max(best, q);
  return best;
}

double total_variation(const std::map<CycleType, long> &counts, long total, const CycleDistribution &ref)
{
  double tv = 0;
  for (const auto &[ct, w] : ref) {
    auto it = counts.find(ct);
    double emp = it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    tv += std::abs(emp - w.get_d());
  }
  for (const auto &[ct, c] : counts)
    if (!ref.count(ct))
      tv += static_cast<double>(c) / total;
  return tv / 2;
}

double chi_square(const std::map<CycleType, long> &counts, long total, const CycleDistribution &ref)
{
  double chi = 0;
  for (const auto &[ct, w] : ref) {
    auto it = counts.find(ct);
    double obs = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    double exp = w.get_d() * total;
    chi += (obs - exp) * (obs - exp) / exp;
  }
  for (const auto &[ct, c] : counts)
    if (c > 0 && !ref.count(ct))
      return std::numeric_limits<double>::infinity();
  return chi;
}

namespace {

struct Candidate {
  std::string name;
  mpz_class order;
  CycleDistribution dist;
};

const PermGroup &projective_group(bool full)
{
  static const PermGroup pgl = group_closure(pgl2_5_generators());
  static const PermGroup psl = group_closure(psl2_5_generators());
  return full ? pgl : psl;
}

std::vector<Candidate> candidates(int d)
{
  mpz_class fac = factorial(d);
  std::vector<Candidate> out;
  out.push_back({"S" + std::to_string(d), fac, sn_an_cycle_distribution(d, false)});
  out.push_back({"A" + std::to_string(d), mpz_class(fac / 2), sn_an_cycle_distribution(d, true)});
  if (d == 6) {
    const PermGroup &pgl = projective_group(true);
    const PermGroup &psl = projective_group(false);
    out.push_back({"PGL(2,5)", pgl.order, pgl.cycle_type_distribution});
    out.push_back({"PSL(2,5)", psl.order, psl.cycle_type_distribution});
  }
  return out;
}

} // namespace

GaloisVerdict classify_galois(long n, u64 lo, u64 hi, const GaloisOptions &opts)
{
  if (n < 3 || n > 26)
    throw DomainError("classify_galois: n must be in [3, 26]");
  GaloisVerdict v;
  v.n = n;
  v.degree = static_cast<int>(n - 1);
  const int d = v.degree;
  IntPolynomial f = build_f1n(n);

  IrreducibilityCertificate cert = theoretical_certificate(n);
  if (cert.verdict != Verdict::Irreducible)
    cert = degree_set_sieve(f, opts.sieve_budget);
  v.irreducibility = cert.kind;
  if (cert.verdict != Verdict::Irreducible) {
    v.diagnostic = "irreducibility not certified";
    return v;
  }
  v.disc_square = discriminant(f).is_square;

  FrobeniusSample s = frobenius_sample(f, lo, hi, opts.threads);
  v.usable_primes = s.usable;
  v.skipped_primes = static_cast<long>(s.skipped.size());

  for (const auto &[ct, p] : s.first_prime) {
    if (is_transposition_witness(ct) && (!v.transposition_prime || p < *v.transposition_prime)) {
      v.transposition_prime = p;
      v.transposition_shape = ct;
    }
    int q = long_cycle_witness(ct, d);
    if (q > 0 && (!v.long_cycle_prime || p < *v.long_cycle_prime)) {
      v.long_cycle_prime = p;
      v.long_cycle_length = q;
    }
  }

  std::vector<Candidate> cands = candidates(d);
  for (const auto &c : cands)
    v.fits.push_back({c.name, total_variation(s.samples, s.usable, c.dist), chi_square(s.samples, s.usable, c.dist)});
  std::vector<std::size_t> idx(cands.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return v.fits[a].total_variation < v.fits[b].total_variation; });
  std::vector<CandidateFit> sorted;
  for (std::size_t i : idx)
    sorted.push_back(v.fits[i]);
  v.fits = sorted;
  auto order_of = [&](const std::string &name) {
    for (const auto &c : cands)
      if (c.name == name)
        return c.order;
    return mpz_class(0);
  };

  if (s.usable < opts.min_usable_primes) {
    v.diagnostic = "only " + std::to_string(s.usable) + " usable primes";
    return v;
  }

  if (!v.disc_square && v.transposition_prime && v.long_cycle_prime) {
    v.kind = GaloisKind::SymmetricProved;
    v.group = cands[0].name;
    v.group_order = cands[0].order;
    v.proof_rule = is_prime_u64(static_cast<u64>(d)) ? ProofRule::PrimeDegree : ProofRule::JordanExtension;
    return v;
  }

  if (s.usable < opts.min_statistical_primes) {
    v.diagnostic = "only " + std::to_string(s.usable) + " usable primes, below the statistical minimum";
    return v;
  }

  if (v.disc_square) {
    const std::string alt = "A" + std::to_string(d);
    for (const auto &fit : v.fits) {
      if (fit.group == alt && fit.total_variation < opts.tv_threshold) {
        v.kind = GaloisKind::AlternatingStatistical;
        v.group = alt;
        v.group_order = order_of(alt);
        return v;
      }
    }
    v.diagnostic = "square discriminant but sample does not fit " + alt;
    return v;
  }

  const CandidateFit &best = v.fits[0];
  if (best.total_variation >= opts.tv_threshold) {
    v.diagnostic = "no candidate within the total-variation threshold";
    return v;
  }
  if (v.fits.size() > 1 && v.fits[1].total_variation - best.total_variation < opts.tie_margin) {
    v.diagnostic = "tie between " + best.group + " and " + v.fits[1].group;
    return v;
  }
  v.kind = GaloisKind::NamedGroupStatistical;
  v.group = best.group;
  v.group_order = order_of(best.group);
  return v;
}

std::string table1_expected(long n)
{
  static const char *const rows[] = {"S3",  "S4",  "S5",  "PGL(2,5)", "S7",  "S8",  "S9",
                                     "S10", "S11", "S12", "S13",      "S14", "S15", "A16",
                                     "A17", "S18", "S19", "S20",      "S21"};
  if (n < 4 || n > 22)
    throw DomainError("table1_expected: n must be in [4, 22]");
  return rows[n - 4];
}

std::vector<Table1Row> verify_table1(u64 lo, u64 hi, const GaloisOptions &opts)
{
  std::vector<Table1Row> out;
  for (long n = 4; n <= 22; ++n) {
    Table1Row row;
    row.n = n;
    row.expected = table1_expected(n);
    row.verdict = classify_galois(n, lo, hi, opts);
    row.agree = row.verdict.kind != GaloisKind::Inconclusive && row.verdict.group == row.expected;
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace nacf
