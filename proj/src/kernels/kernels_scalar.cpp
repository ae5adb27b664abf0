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

#include <algorithm>

#include "switchdp/kernels/kernels.hpp"

namespace switchdp::kernels {
namespace {

void GaussianLogDensityScalar(double y, const double* mean,
                              const double* inv_var, const double* log_norm,
                              double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double d = y - mean[k];
    out[k] = log_norm[k] - 0.5 * (d * d) * inv_var[k];
  }
}

void MaxPlusUpdateScalar(double* best, std::int32_t* arg, const double* cand,
                         double add, std::int32_t label, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    const double v = cand[r] + add;
    if (v > best[r]) {
      best[r] = v;
      arg[r] = label;
    }
  }
}

void AccumulateScalar(double* acc, const double* x, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) acc[r] += x[r];
}

void BucketIndexScalar(const double* v, double lo, double inv_width,
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
const KernelTable kScalarTable{
    Isa::kScalar,      GaussianLogDensityScalar, MaxPlusUpdateScalar,
    AccumulateScalar, BucketIndexScalar,
};
}  // namespace detail

}  // namespace switchdp::kernels
