/*
 *  Copyright 2026 The hybridseq authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cstddef>
#include <string>

namespace hybridseq::kernels {

// Dense double-precision inner loops used by the models. Every entry point
// has a scalar reference implementation and (on x86-64) an AVX2+FMA variant.
// The active variant is picked once at startup: HYBRIDSEQ_KERNELS=scalar|avx2
// overrides the CPUID-based default. All kernels are pure and thread-safe.
//
// The two variants agree to reduction rounding only (different summation
// order); transcendentals are never vectorized, so everything outside the
// kernels is bit-identical across backends.

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();

/// Switch the active backend. Throws InvalidConfig if unsupported on this CPU.
void set_backend(Backend b);

/// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

/// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

/// x[i] *= alpha
void scal(double alpha, double* x, std::size_t n);

/// sum_i x[i]
double sum(const double* x, std::size_t n);

/// sum_i x[i]^2
double sumsq(const double* x, std::size_t n);

/// sum_i (a[i]-b[i])^2
double sqdist(const double* a, const double* b, std::size_t n);

/// out[i] = a[i]*b[i]
void vmul(const double* a, const double* b, double* out, std::size_t n);

/// y = A x, A row-major rows x cols, y length rows.
void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y);

/// y = A^T x, A row-major rows x cols, x length rows, y length cols.
void matvec_t(const double* a, std::size_t rows, std::size_t cols,
              const double* x, double* y);

/// A += g x^T (rank-1 update), A row-major rows x cols.
void ger(double* a, std::size_t rows, std::size_t cols, const double* g,
         const double* x);

}  // namespace hybridseq::kernels
