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

// AVX2 variants. This translation unit is compiled with -mavx2 and must only
// be entered after the dispatcher confirmed CPU support.

#include <immintrin.h>

#include <algorithm>

#include "switchdp/kernels/kernels.hpp"

namespace switchdp::kernels {
namespace {

constexpr std::size_t kLanes = 4;

void GaussianLogDensityAvx2(double y, const double* mean,
                            const double* inv_var, const double* log_norm,
                            double* out, std::size_t n) {
  const __m256d vy = _mm256_set1_pd(y);
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m256d d = _mm256_sub_pd(vy, _mm256_loadu_pd(mean + k));
    __m256d t = _mm256_mul_pd(half, _mm256_mul_pd(d, d));
    t = _mm256_mul_pd(t, _mm256_loadu_pd(inv_var + k));
    _mm256_storeu_pd(out + k, _mm256_sub_pd(_mm256_loadu_pd(log_norm + k), t));
  }
  for (; k < n; ++k) {
    const double d = y - mean[k];
    out[k] = log_norm[k] - 0.5 * (d * d) * inv_var[k];
  }
}

void MaxPlusUpdateAvx2(double* best, std::int32_t* arg, const double* cand,
                       double add, std::int32_t label, std::size_t n) {
  const __m256d vadd = _mm256_set1_pd(add);
  const __m128i vlabel = _mm_set1_epi32(label);
  // Picks the low 32 bits of each 64-bit mask lane.
  const __m256i narrow = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  std::size_t r = 0;
  for (; r + kLanes <= n; r += kLanes) {
    const __m256d v = _mm256_add_pd(_mm256_loadu_pd(cand + r), vadd);
    const __m256d b = _mm256_loadu_pd(best + r);
    const __m256d gt = _mm256_cmp_pd(v, b, _CMP_GT_OQ);
    if (_mm256_movemask_pd(gt) == 0) continue;
    _mm256_storeu_pd(best + r, _mm256_blendv_pd(b, v, gt));
    const __m128i m32 = _mm256_castsi256_si128(
        _mm256_permutevar8x32_epi32(_mm256_castpd_si256(gt), narrow));
    const __m128i a =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(arg + r));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(arg + r),
                     _mm_blendv_epi8(a, vlabel, m32));
  }
  for (; r < n; ++r) {
    const double v = cand[r] + add;
    if (v > best[r]) {
      best[r] = v;
      arg[r] = label;
    }
  }
}

void AccumulateAvx2(double* acc, const double* x, std::size_t n) {
  std::size_t r = 0;
  for (; r + kLanes <= n; r += kLanes) {
    _mm256_storeu_pd(acc + r, _mm256_add_pd(_mm256_loadu_pd(acc + r),
                                            _mm256_loadu_pd(x + r)));
  }
  for (; r < n; ++r) acc[r] += x[r];
}

void BucketIndexAvx2(const double* v, double lo, double inv_width,
                     std::int32_t bins, std::int32_t* out, std::size_t n) {
  const double top = static_cast<double>(bins - 1);
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d viw = _mm256_set1_pd(inv_width);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d vtop = _mm256_set1_pd(top);
  std::size_t r = 0;
  for (; r + kLanes <= n; r += kLanes) {
    __m256d t = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(v + r), vlo), viw);
    t = _mm256_min_pd(_mm256_max_pd(t, vzero), vtop);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + r),
                     _mm256_cvttpd_epi32(t));
  }
  for (; r < n; ++r) {
    double t = (v[r] - lo) * inv_width;
    t = std::min(std::max(t, 0.0), top);
    out[r] = static_cast<std::int32_t>(t);
  }
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{
    Isa::kAvx2,     GaussianLogDensityAvx2, MaxPlusUpdateAvx2,
    AccumulateAvx2, BucketIndexAvx2,
};
}  // namespace detail

}  // namespace switchdp::kernels
