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

#ifndef AMPC_SRC_KERNELS_KERNELS_IMPL_HPP_
#define AMPC_SRC_KERNELS_KERNELS_IMPL_HPP_

// Internal: per-backend operation tables and capability probes.

#include "ampc/kernels/kernels.hpp"

namespace ampc::kernels {

extern const Ops kScalarOps;

#if defined(AMPC_HAVE_AVX2)
extern const Ops kAvx2Ops;
#endif

bool cpu_has_avx2();

}  // namespace ampc::kernels

#endif  // AMPC_SRC_KERNELS_KERNELS_IMPL_HPP_
