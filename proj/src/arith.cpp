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

#include "nacf/arith.hpp"

#include <algorithm>
#include <cmath>

#include "nacf/error.hpp"

namespace nacf {

mpz_class binomial(long n, long k)
{
  if (n < 0 || k < 0 || k > n)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m)
{
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p)
{
  a %= p;
  if (a == 0)
    throw DomainError("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime_u64(u64 n)
{
  if (n < 2)
    return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0)
      return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic below 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi)
{
  std::vector<u64> out;
  if (hi < 2 || lo > hi)
    return out;
  lo = std::max<u64>(lo, 2);
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi)));
  while (root * root > hi)
    --root;
  while ((root + 1) * (root + 1) <= hi)
    ++root;

  std::vector<bool> small(root + 1, true);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i])
      continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i)
      small[j] = false;
  }

  constexpr u64 segment = 1 << 18;
  std::vector<bool> mark;
  for (u64 start = lo; start <= hi; start += segment) {
    u64 end = std::min(hi, start + segment - 1);
    mark.assign(end - start + 1, true);
    for (u64 q : base) {
      u64 first = std::max(q * q, (start + q - 1) / q * q);
      for (u64 j = first; j <= end; j += q)
        mark[j - start] = false;
    }
    for (u64 i = start; i <= end; ++i) {
      if (mark[i - start])
        out.push_back(i);
    }
    if (end == hi)
      break;
  }
  return out;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n)
{
  std::vector<std::pair<u64, int>> out;
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e)
      out.emplace_back(q, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

} // namespace nacf
