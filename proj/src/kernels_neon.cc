// Copyright 2026 The Duplicity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstddef>

#include "kernels_internal.h"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace duplicity::kernels::internal {
namespace {

void NeonAxpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t a = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t prod = vmulq_f64(a, vld1q_f64(x + i));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void NeonScale(double alpha, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vmulq_n_f64(vld1q_f64(y + i), alpha));
  }
  for (; i < n; ++i) y[i] *= alpha;
}

void NeonAffineMap(double intercept, double slope, const double* x,
                   double* out, std::size_t n) {
  const float64x2_t b = vdupq_n_f64(intercept);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vaddq_f64(b, vmulq_n_f64(vld1q_f64(x + i), slope)));
  }
  for (; i < n; ++i) out[i] = intercept + slope * x[i];
}

double NeonMaxAbs(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  double m = std::fmax(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
  for (; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

constexpr KernelTable kNeonTable = {NeonAxpy, NeonScale, NeonAffineMap,
                                    NeonMaxAbs};

}  // namespace

const KernelTable* NeonTable() { return &kNeonTable; }

}  // namespace duplicity::kernels::internal

#else

namespace duplicity::kernels::internal {
const KernelTable* NeonTable() { return nullptr; }
}  // namespace duplicity::kernels::internal

#endif
