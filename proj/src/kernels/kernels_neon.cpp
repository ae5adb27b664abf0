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

// AArch64 NEON variants (two double lanes). Only built on aarch64 targets,
// where Advanced SIMD is architecturally guaranteed.

#include <arm_neon.h>

#include <algorithm>

#include "switchdp/kernels/kernels.hpp"

namespace switchdp::kernels {
namespace {

constexpr std::size_t kLanes = 2;

void GaussianLogDensityNeon(double y, const double* mean,
                            const double* inv_var, const double* log_norm,
                            double* out, std::size_t n) {
  const float64x2_t vy = vdupq_n_f64(y);
  const float64x2_t half = vdupq_n_f64(0.5);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const float64x2_t d = vsubq_f64(vy, vld1q_f64(mean + k));
    float64x2_t t = vmulq_f64(half, vmulq_f64(d, d));
    t = vmulq_f64(t, vld1q_f64(inv_var + k));
    vst1q_f64(out + k, vsubq_f64(vld1q_f64(log_norm + k), t));
  }
  for (; k < n; ++k) {
    const double d = y - mean[k];
    out[k] = log_norm[k] - 0.5 * (d * d) * inv_var[k];
  }
}

void MaxPlusUpdateNeon(double* best, std::int32_t* arg, const double* cand,
                       double add, std::int32_t label, std::size_t n) {
  const float64x2_t vadd = vdupq_n_f64(add);
  std::size_t r = 0;
  for (; r + kLanes <= n; r += kLanes) {
    const float64x2_t v = vaddq_f64(vld1q_f64(cand + r), vadd);
    const float64x2_t b = vld1q_f64(best + r);
    const uint64x2_t gt = vcgtq_f64(v, b);
    vst1q_f64(best + r, vbslq_f64(gt, v, b));
    if (vgetq_lane_u64(gt, 0)) arg[r] = label;
    if (vgetq_lane_u64(gt, 1)) arg[r + 1] = label;
  }
  for (; r < n; ++r) {
    const double v = cand[r] + add;
    if (v > best[r]) {
      best[r] = v;
      arg[r] = label;
    }
  }
}

void AccumulateNeon(double* acc, const double* x, std::size_t n) {
  std::size_t r = 0;
  for (; r + kLanes <= n; r += kLanes) {
    vst1q_f64(acc + r, vaddq_f64(vld1q_f64(acc + r), vld1q_f64(x + r)));
  }
  for (; r < n; ++r) acc[r] += x[r];
}

void BucketIndexNeon(const double* v, double lo, double inv_width,
                     std::int32_t bins, std::int32_t* out, std::size_t n) {
  const double top = static_cast<double>(bins - 1);
  for (std::size_t r = 0; r < n; ++r) {
    double t = (v[r] - lo) * inv_width;
    t = std::min(std::max(t, 0.0), top);
    out[r] = static_cast<std::int32_t>(t);
  }
}

}  // namespace

namespace detail {
const KernelTable kNeonTable{
    Isa::kNeon,     GaussianLogDensityNeon, MaxPlusUpdateNeon,
    AccumulateNeon, BucketIndexNeon,
};
}  // namespace detail

}  // namespace switchdp::kernels
