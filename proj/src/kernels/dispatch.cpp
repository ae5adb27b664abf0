// Copyright 2026 The switchdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string>

#include "switchdp/kernels/kernels.hpp"

namespace switchdp::kernels {
namespace {

bool CpuHasAvx2() {
#if defined(SWITCHDP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& SelectKernels() {
  if (const char* env = std::getenv("SWITCHDP_ISA")) {
    const std::string want(env);
    if (want == "avx2") {
      if (const KernelTable* k = KernelsFor(Isa::kAvx2)) return *k;
    } else if (want == "neon") {
      if (const KernelTable* k = KernelsFor(Isa::kNeon)) return *k;
    }
    return detail::kScalarTable;
  }
  if (const KernelTable* k = KernelsFor(Isa::kAvx2)) return *k;
  if (const KernelTable* k = KernelsFor(Isa::kNeon)) return *k;
  return detail::kScalarTable;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& ScalarKernels() { return detail::kScalarTable; }

const KernelTable* KernelsFor(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &detail::kScalarTable;
    case Isa::kAvx2:
#if defined(SWITCHDP_HAVE_AVX2)
      if (CpuHasAvx2()) return &detail::kAvx2Table;
#endif
      return nullptr;
    case Isa::kNeon:
#if defined(SWITCHDP_HAVE_NEON)
      return &detail::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& ActiveKernels() {
  static const KernelTable& table = SelectKernels();
  return table;
}

std::vector<Isa> AvailableIsas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (KernelsFor(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

}  // namespace switchdp::kernels
