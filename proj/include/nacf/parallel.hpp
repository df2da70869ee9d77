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

#ifndef NACF_PARALLEL_HPP
#define NACF_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nacf {

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and returns
/// the results in index order. Each worker owns a contiguous block, so the
/// output does not depend on the thread count. The first exception thrown by
/// any worker is rethrown after all workers join.
template<typename Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}))>
{
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(count);
  unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      out[i] = fn(i);
    return out;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  std::size_t block = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        std::size_t lo = w * block;
        std::size_t hi = std::min(count, lo + block);
        for (std::size_t i = lo; i < hi; ++i)
          out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : pool)
    t.join();
  for (auto &e : errors) {
    if (e)
      std::rethrow_exception(e);
  }
  return out;
}

} // namespace nacf

#endif // NACF_PARALLEL_HPP
