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

#include "duplicity/kernels.h"

#include <atomic>
#include <cassert>
#include <cmath>

#include "kernels_internal.h"

namespace duplicity::kernels {
namespace {

void ScalarAxpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void ScalarScale(double alpha, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= alpha;
}

void ScalarAffineMap(double intercept, double slope, const double* x,
                     double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = intercept + slope * x[i];
}

double ScalarMaxAbs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

constexpr KernelTable kScalarTable = {ScalarAxpy, ScalarScale,
                                      ScalarAffineMap, ScalarMaxAbs};

// -1 means "not yet selected".
std::atomic<int> g_backend{-1};

const KernelTable* TableFor(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &kScalarTable;
    case Backend::kAvx2:
      return internal::Avx2Table();
    case Backend::kNeon:
      return internal::NeonTable();
  }
  return nullptr;
}

const KernelTable& Active() {
  return *TableFor(ActiveBackend());
}

}  // namespace

std::string_view BackendName(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

Backend DetectBackend() {
  if (internal::Avx2Table() != nullptr) return Backend::kAvx2;
  if (internal::NeonTable() != nullptr) return Backend::kNeon;
  return Backend::kScalar;
}

Backend ActiveBackend() {
  int current = g_backend.load(std::memory_order_acquire);
  if (current < 0) {
    current = static_cast<int>(DetectBackend());
    g_backend.store(current, std::memory_order_release);
  }
  return static_cast<Backend>(current);
}

bool SetBackend(Backend backend) {
  if (TableFor(backend) == nullptr) return false;
  g_backend.store(static_cast<int>(backend), std::memory_order_release);
  return true;
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  Active().axpy(alpha, x.data(), y.data(), y.size());
}

void Scale(double alpha, std::span<double> y) {
  Active().scale(alpha, y.data(), y.size());
}

void AffineMap(double intercept, double slope, std::span<const double> x,
               std::span<double> out) {
  assert(x.size() == out.size());
  Active().affine_map(intercept, slope, x.data(), out.data(), out.size());
}

double MaxAbs(std::span<const double> x) {
  return Active().max_abs(x.data(), x.size());
}

std::size_t ArgMax(std::span<const double> x) {
  assert(!x.empty());
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] > x[best]) best = i;
  }
  return best;
}

const KernelTable& ScalarKernels() { return kScalarTable; }
const KernelTable* Avx2Kernels() { return internal::Avx2Table(); }
const KernelTable* NeonKernels() { return internal::NeonTable(); }

}  // namespace duplicity::kernels
