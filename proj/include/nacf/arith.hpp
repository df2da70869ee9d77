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

#ifndef NACF_ARITH_HPP
#define NACF_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nacf {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Exact binomial coefficient; zero when k < 0 or k > n (n >= 0).
mpz_class binomial(long n, long k);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

/// All primes p with lo <= p <= hi, ascending (segmented sieve).
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Trial-division factorization of a machine integer, ascending primes.
std::vector<std::pair<u64, int>> factor_u64(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
/// Inverse of a modulo prime p; a must be nonzero mod p.
u64 invmod(u64 a, u64 p);

} // namespace nacf

#endif // NACF_ARITH_HPP
