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

namespace hybridseq::kernels {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scal)(double, double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  double (*sqdist)(const double*, const double*, std::size_t);
  void (*vmul)(const double*, const double*, double*, std::size_t);
  void (*matvec)(const double*, std::size_t, std::size_t, const double*,
                 double*);
  void (*matvec_t)(const double*, std::size_t, std::size_t, const double*,
                   double*);
  void (*ger)(double*, std::size_t, std::size_t, const double*, const double*);
};

extern const KernelTable kScalarTable;

#if defined(HYBRIDSEQ_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

}  // namespace hybridseq::kernels
