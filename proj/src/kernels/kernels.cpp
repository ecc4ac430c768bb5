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

#include "hybridseq/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "hybridseq/errors.hpp"
#include "kernel_table.hpp"

namespace hybridseq::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(HYBRIDSEQ_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Backend b) {
#if defined(HYBRIDSEQ_HAVE_AVX2)
  if (b == Backend::avx2) return &kAvx2Table;
#endif
  (void)b;
  return &kScalarTable;
}

Backend detect_backend() {
  if (const char* env = std::getenv("HYBRIDSEQ_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!cpu_has_avx2())
        throw InvalidConfig("HYBRIDSEQ_KERNELS=avx2 but this CPU lacks AVX2/FMA");
      return Backend::avx2;
    }
    if (std::strcmp(env, "auto") != 0)
      throw InvalidConfig(std::string("unknown HYBRIDSEQ_KERNELS value: ") + env);
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

struct Dispatch {
  Backend backend;
  const KernelTable* table;
  Dispatch() : backend(detect_backend()), table(table_for(backend)) {}
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend b) {
  return b == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() { return dispatch().backend; }

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw InvalidConfig(std::string("kernel backend not supported on this CPU: ") +
                        backend_name(b));
  dispatch().backend = b;
  dispatch().table = table_for(b);
}

double dot(const double* a, const double* b, std::size_t n) {
  return dispatch().table->dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  dispatch().table->axpy(alpha, x, y, n);
}

void scal(double alpha, double* x, std::size_t n) {
  dispatch().table->scal(alpha, x, n);
}

double sum(const double* x, std::size_t n) { return dispatch().table->sum(x, n); }

double sumsq(const double* x, std::size_t n) {
  return dispatch().table->sumsq(x, n);
}

double sqdist(const double* a, const double* b, std::size_t n) {
  return dispatch().table->sqdist(a, b, n);
}

void vmul(const double* a, const double* b, double* out, std::size_t n) {
  dispatch().table->vmul(a, b, out, n);
}

void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y) {
  dispatch().table->matvec(a, rows, cols, x, y);
}

void matvec_t(const double* a, std::size_t rows, std::size_t cols,
              const double* x, double* y) {
  dispatch().table->matvec_t(a, rows, cols, x, y);
}

void ger(double* a, std::size_t rows, std::size_t cols, const double* g,
         const double* x) {
  dispatch().table->ger(a, rows, cols, g, x);
}

}  // namespace hybridseq::kernels
