// Copyright 2026 The Annealed MPC Authors
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

#include "ampc/core/parallel.hpp"

#include <cstdlib>

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ampc {

void parallel_for(int64_t count, int threads,
                  const std::function<void(int64_t, int64_t)>& fn) {
  if (count <= 0) return;
  threads = std::max(1, threads);
  const int64_t workers = std::min<int64_t>(threads, count);
  if (workers == 1) {
    fn(0, count);
    return;
  }

  const int64_t chunk = (count + workers - 1) / workers;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&](int64_t begin, int64_t end) {
    try {
      fn(begin, end);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers - 1));
  for (int64_t w = 1; w < workers; ++w) {
    const int64_t begin = w * chunk;
    const int64_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(run, begin, end);
  }
  run(0, std::min(count, chunk));
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

int env_thread_cap(int fallback) {
  const char* raw = std::getenv("ANNEALED_MPC_THREADS");
  if (raw == nullptr || *raw == '\0') return std::max(1, fallback);
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (end == raw) return std::max(1, fallback);
  return std::max(1L, parsed) > 1024 ? 1024 : static_cast<int>(std::max(1L, parsed));
}

}  // namespace ampc
