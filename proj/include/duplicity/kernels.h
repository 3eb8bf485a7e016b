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

#ifndef DUPLICITY_KERNELS_H_
#define DUPLICITY_KERNELS_H_

// Elementwise double-precision kernels used by the simplex tableau and the
// belief-grid scans. Each kernel has a portable scalar reference and, where
// the target supports it, an AVX2 or NEON variant. The variants perform the
// same IEEE operations in the same per-element order, so every backend
// produces bit-identical results.

#include <cstddef>
#include <span>
#include <string_view>

namespace duplicity::kernels {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view BackendName(Backend backend);

// Best backend supported by the running CPU.
Backend DetectBackend();

// Backend used by the dispatching entry points below. Defaults to
// DetectBackend() on first use.
Backend ActiveBackend();

// Forces a backend; returns false (and leaves the selection unchanged) when
// the CPU or the build does not support it.
bool SetBackend(Backend backend);

// y[i] += alpha * x[i]
void Axpy(double alpha, std::span<const double> x, std::span<double> y);

// y[i] *= alpha
void Scale(double alpha, std::span<double> y);

// out[i] = intercept + slope * x[i]
void AffineMap(double intercept, double slope, std::span<const double> x,
               std::span<double> out);

// max_i |x[i]|, 0 for an empty span.
double MaxAbs(std::span<const double> x);

// Index of the first maximal element; x must be nonempty.
std::size_t ArgMax(std::span<const double> x);

// Per-backend tables, exposed for equivalence testing.
struct KernelTable {
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  void (*affine_map)(double, double, const double*, double*, std::size_t);
  double (*max_abs)(const double*, std::size_t);
};

const KernelTable& ScalarKernels();
// nullptr when the variant is not compiled in.
const KernelTable* Avx2Kernels();
const KernelTable* NeonKernels();

}  // namespace duplicity::kernels

#endif  // DUPLICITY_KERNELS_H_
