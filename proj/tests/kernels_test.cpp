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

#include "switchdp/kernels/kernels.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "switchdp/rng.hpp"

namespace switchdp::kernels {
namespace {

std::vector<double> RandomValues(std::size_t n, double lo, double hi, Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = lo + (hi - lo) * UniformOpen01(rng);
  return v;
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {
 protected:
  const KernelTable& simd() const { return *KernelsFor(GetParam()); }
  const KernelTable& scalar() const { return ScalarKernels(); }
};

TEST_P(KernelEquivalence, GaussianLogDensityBitIdentical) {
  Rng rng(1);
  for (std::size_t n = 0; n < 40; ++n) {
    const auto mean = RandomValues(n, 0, 3000, rng);
    const auto inv_var = RandomValues(n, 1e-6, 1.0, rng);
    const auto log_norm = RandomValues(n, -20, 0, rng);
    const double y = 3000 * UniformOpen01(rng);
    std::vector<double> a(n), b(n);
    GaussianLogDensity(scalar(), y, mean, inv_var, log_norm, a);
    GaussianLogDensity(simd(), y, mean, inv_var, log_norm, b);
    EXPECT_EQ(a, b) << "n=" << n;
  }
}

TEST_P(KernelEquivalence, MaxPlusUpdateBitIdenticalWithTies) {
  Rng rng(2);
  for (std::size_t n = 0; n < 40; ++n) {
    std::vector<double> best(n), cand(n);
    for (std::size_t r = 0; r < n; ++r) {
      // Coarse values force frequent exact ties.
      best[r] = static_cast<double>(UniformIndex(rng, 4));
      cand[r] = static_cast<double>(UniformIndex(rng, 4));
    }
    std::vector<std::int32_t> arg(n, 7);
    auto best_b = best;
    auto arg_b = arg;
    MaxPlusUpdate(scalar(), best, arg, cand, 1.0, 3);
    MaxPlusUpdate(simd(), best_b, arg_b, cand, 1.0, 3);
    EXPECT_EQ(best, best_b);
    EXPECT_EQ(arg, arg_b);
  }
}

TEST_P(KernelEquivalence, AccumulateBitIdentical) {
  Rng rng(3);
  for (std::size_t n = 0; n < 40; ++n) {
    auto acc = RandomValues(n, -1e3, 1e3, rng);
    const auto x = RandomValues(n, -1e3, 1e3, rng);
    auto acc_b = acc;
    Accumulate(scalar(), acc, x);
    Accumulate(simd(), acc_b, x);
    EXPECT_EQ(acc, acc_b);
  }
}

TEST_P(KernelEquivalence, BucketIndexIdenticalIncludingEdges) {
  Rng rng(4);
  for (std::size_t n = 0; n < 40; ++n) {
    auto v = RandomValues(n, -50, 1050, rng);
    if (n > 3) {
      v[0] = 0.0;
      v[1] = 1000.0;
      v[2] = 500.0;
    }
    std::vector<std::int32_t> a(n), b(n);
    BucketIndex(scalar(), v, 0.0, 50.0 / 1000.0, 50, a);
    BucketIndex(simd(), v, 0.0, 50.0 / 1000.0, 50, b);
    EXPECT_EQ(a, b);
    for (auto i : a) {
      EXPECT_GE(i, 0);
      EXPECT_LT(i, 50);
    }
  }
}

std::vector<Isa> SimdIsas() {
  std::vector<Isa> out;
  for (Isa isa : AvailableIsas()) {
    if (isa != Isa::kScalar) out.push_back(isa);
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Available, KernelEquivalence, ::testing::ValuesIn(SimdIsas()),
                         [](const auto& info) { return std::string(IsaName(info.param)); });
GTEST_ALLOW_UNINSTANTIATED_PARAMETERIZED_TEST(KernelEquivalence);

TEST(Kernels, ScalarReferenceValues) {
  const KernelTable& k = ScalarKernels();
  const std::vector<double> mean{0.0, 10.0}, inv_var{1.0, 0.25}, log_norm{-1.0, -2.0};
  std::vector<double> out(2);
  GaussianLogDensity(k, 4.0, mean, inv_var, log_norm, out);
  EXPECT_DOUBLE_EQ(out[0], -1.0 - 8.0);
  EXPECT_DOUBLE_EQ(out[1], -2.0 - 0.5 * 36.0 * 0.25);

  std::vector<double> best{1.0, 5.0};
  std::vector<std::int32_t> arg{0, 0};
  const std::vector<double> cand{1.0, 1.0};
  MaxPlusUpdate(k, best, arg, cand, 0.0, 9);
  EXPECT_EQ(arg, (std::vector<std::int32_t>{0, 0}));  // tie keeps the earlier label
  MaxPlusUpdate(k, best, arg, cand, 0.5, 9);
  EXPECT_EQ(arg, (std::vector<std::int32_t>{9, 0}));
}

TEST(Kernels, ActiveTableIsAvailable) {
  const auto isas = AvailableIsas();
  EXPECT_NE(std::find(isas.begin(), isas.end(), ActiveKernels().isa), isas.end());
  EXPECT_NE(KernelsFor(Isa::kScalar), nullptr);
}

}  // namespace
}  // namespace switchdp::kernels
