// Copyright 2026 The certlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Trial fan-out. Trials are cut into fixed-size chunks; chunk c draws from
// CounterRng(seed, c + 1) and partials are returned in chunk order, so the
// merged result does not depend on the number of worker threads.

#ifndef CERTLAB_PARALLEL_H_
#define CERTLAB_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace certlab {

inline constexpr std::uint64_t kTrialChunk = 1024;

struct RunOptions {
  std::uint64_t seed = 0;
  int threads = 1;
};

// fn(chunk_index, begin, end) -> Partial. Runs every chunk exactly once.
template <class Partial, class ChunkFn>
std::vector<Partial> run_chunks(std::uint64_t total, std::uint64_t chunk,
                                int threads, ChunkFn&& fn) {
  if (chunk == 0) chunk = 1;
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<Partial> partials(chunks);
  if (chunks == 0) return partials;

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        partials[c] = fn(c, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };

  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  if (workers == 1 || chunks == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(std::min(workers, chunks));
    for (std::uint64_t i = 0; i < std::min(workers, chunks); ++i) {
      pool.emplace_back(worker);
    }
  }
  if (failure) std::rethrow_exception(failure);
  return partials;
}

}  // namespace certlab

#endif  // CERTLAB_PARALLEL_H_
