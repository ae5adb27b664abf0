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

// Data-parallel inner loops used by inference, re-aggregation and the
// histogram metrics. Each kernel has a scalar reference implementation and
// optional SIMD variants; the variant is picked once at runtime from the CPU
// feature set. Every variant must produce bit-identical results to the scalar
// reference (the build disables FP contraction so no FMA sneaks in).

#ifndef SWITCHDP_KERNELS_KERNELS_HPP_
#define SWITCHDP_KERNELS_KERNELS_HPP_

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace switchdp::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);

struct KernelTable {
  Isa isa;

  // out[k] = log_norm[k] - 0.5 * (y - mean[k])^2 * inv_var[k]
  void (*gaussian_log_density)(double y, const double* mean,
                               const double* inv_var, const double* log_norm,
                               double* out, std::size_t n);

  // v = cand[r] + add; if (v > best[r]) { best[r] = v; arg[r] = label; }
  // Strict comparison: earlier labels win ties.
  void (*max_plus_update)(double* best, std::int32_t* arg, const double* cand,
                          double add, std::int32_t label, std::size_t n);

  // acc[r] += x[r]
  void (*accumulate)(double* acc, const double* x, std::size_t n);

  // out[r] = trunc(clamp((v[r] - lo) * inv_width, 0, bins - 1))
  void (*bucket_index)(const double* v, double lo, double inv_width,
                       std::int32_t bins, std::int32_t* out, std::size_t n);
};

const KernelTable& ScalarKernels();

// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* KernelsFor(Isa isa);

// Best available table. SWITCHDP_ISA=scalar|avx2|neon in the environment
// overrides the choice (falls back to scalar when unavailable).
const KernelTable& ActiveKernels();

std::vector<Isa> AvailableIsas();

inline void GaussianLogDensity(const KernelTable& k, double y,
                               std::span<const double> mean,
                               std::span<const double> inv_var,
                               std::span<const double> log_norm,
                               std::span<double> out) {
  assert(mean.size() == out.size() && inv_var.size() == out.size() &&
         log_norm.size() == out.size());
  k.gaussian_log_density(y, mean.data(), inv_var.data(), log_norm.data(),
                         out.data(), out.size());
}

inline void MaxPlusUpdate(const KernelTable& k, std::span<double> best,
                          std::span<std::int32_t> arg,
                          std::span<const double> cand, double add,
                          std::int32_t label) {
  assert(best.size() == arg.size() && best.size() == cand.size());
  k.max_plus_update(best.data(), arg.data(), cand.data(), add, label,
                    best.size());
}

inline void Accumulate(const KernelTable& k, std::span<double> acc,
                       std::span<const double> x) {
  assert(acc.size() == x.size());
  k.accumulate(acc.data(), x.data(), acc.size());
}

inline void BucketIndex(const KernelTable& k, std::span<const double> v,
                        double lo, double inv_width, std::int32_t bins,
                        std::span<std::int32_t> out) {
  assert(v.size() == out.size());
  k.bucket_index(v.data(), lo, inv_width, bins, out.data(), v.size());
}

namespace detail {
extern const KernelTable kScalarTable;
#if defined(SWITCHDP_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(SWITCHDP_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace switchdp::kernels

#endif  // SWITCHDP_KERNELS_KERNELS_HPP_
