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

#ifndef AMPC_CORE_PARALLEL_HPP_
#define AMPC_CORE_PARALLEL_HPP_

#include <cstdint>

#include <functional>

namespace ampc {

// Runs fn(begin, end) over a static partition of [0, count) on `threads`
// OS threads (the calling thread works too). Partition boundaries depend
// only on (count, threads), and each worker may write only to slots in its
// own range, so results are identical for any thread count. Exceptions
// thrown by workers are rethrown on the calling thread (first one wins).
void parallel_for(int64_t count, int threads,
                  const std::function<void(int64_t, int64_t)>& fn);

// Thread cap from the ANNEALED_MPC_THREADS environment variable, or
// `fallback` when unset. Values below 1 are clamped to 1.
int env_thread_cap(int fallback = 1);

}  // namespace ampc

#endif  // AMPC_CORE_PARALLEL_HPP_
