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

#include <cstdlib>
#include <cstring>

#include <atomic>

#include "ampc/core/errors.hpp"
#include "kernels_impl.hpp"

namespace ampc::kernels {

bool cpu_has_avx2() {
#if defined(AMPC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

Backend pick_startup_backend() {
  const char* env = std::getenv("ANNEALED_MPC_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!cpu_has_avx2()) {
        throw ValidationError("ANNEALED_MPC_SIMD=avx2 but the CPU lacks AVX2");
      }
      return Backend::kAvx2;
    }
    throw ValidationError(std::string("ANNEALED_MPC_SIMD: unknown backend '") +
                          env + "' (expected scalar or avx2)");
  }
  return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{pick_startup_backend()};
  return slot;
}

}  // namespace

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
      return cpu_has_avx2();
  }
  return false;
}

const Ops& scalar_ops() { return kScalarOps; }

const Ops& ops_for(Backend backend) {
  if (backend == Backend::kScalar) return kScalarOps;
#if defined(AMPC_HAVE_AVX2)
  if (backend == Backend::kAvx2 && cpu_has_avx2()) return kAvx2Ops;
#endif
  throw ValidationError(std::string("kernel backend unavailable: ") +
                        backend_name(backend));
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

const Ops& active() { return ops_for(active_backend()); }

void force_backend(Backend backend) {
  if (!backend_supported(backend)) {
    throw ValidationError(std::string("kernel backend unavailable: ") +
                          backend_name(backend));
  }
  backend_slot().store(backend, std::memory_order_relaxed);
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace ampc::kernels
