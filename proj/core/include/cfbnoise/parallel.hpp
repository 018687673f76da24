// Copyright 2026 The cfbnoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CFBNOISE_PARALLEL_HPP_
#define CFBNOISE_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cfbnoise {

/// Splits [0, n) into contiguous chunks, runs `fn(begin, end)` on each in its
/// own thread and returns the results in chunk order. The first exception
/// thrown by any chunk is rethrown after all threads join.
template <typename Result, typename Fn>
[[nodiscard]] std::vector<Result> parallel_chunks(std::size_t n, Fn&& fn,
                                                  unsigned max_threads = 0) {
  unsigned threads = max_threads != 0 ? max_threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));

  std::vector<Result> results(threads);
  if (threads == 1) {
    results[0] = fn(std::size_t{0}, n);
    return results;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = n * t / threads;
    const std::size_t end = n * (t + 1) / threads;
    pool.emplace_back([&, t, begin, end] {
      try {
        results[t] = fn(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace cfbnoise

#endif  // CFBNOISE_PARALLEL_HPP_
