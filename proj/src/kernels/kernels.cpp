// Copyright 2026 The photonc authors
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

#include "photonc/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace photonc::kernels {

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

namespace {

const Kernels* resolve() {
  const char* force = std::getenv("PHOTONC_KERNEL");
  if (force != nullptr) {
    if (std::strcmp(force, "scalar") == 0) return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (std::strcmp(force, "avx2") == 0 && avx2_supported()) return &kAvx2;
#endif
    return &kScalar;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_supported()) return &kAvx2;
#endif
  return &kScalar;
}

}  // namespace

const Kernels& active() {
  static const Kernels* table = resolve();
  return *table;
}

}  // namespace photonc::kernels
