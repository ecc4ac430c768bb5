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

#include "hybridseq/discretize.hpp"

#include <algorithm>
#include <cmath>

#include "hybridseq/errors.hpp"

namespace hybridseq {

namespace {

// Linearly interpolated empirical quantile of a sorted vector.
double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

DiscretizationSpec DiscretizationSpec::fit(
    const std::vector<std::vector<double>>& series, std::size_t n_bins) {
  if (n_bins < 2) throw InvalidConfig("discretizer needs n_bins >= 2");
  if (series.empty()) throw EmptyInput("discretizer needs at least one feature");
  DiscretizationSpec spec;
  spec.requested_bins = n_bins;
  spec.edges.reserve(series.size());
  for (const auto& feature : series) {
    if (feature.empty()) throw EmptyInput("discretizer feature series is empty");
    std::vector<double> sorted = feature;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> edges;
    for (std::size_t k = 1; k < n_bins; ++k) {
      const double e = quantile_sorted(sorted, static_cast<double>(k) / static_cast<double>(n_bins));
      // Values equal to an edge bin to its left, so an edge at or above the
      // training maximum separates nothing; duplicates collapse. Constant
      // features therefore end up with zero edges (a single bin).
      if (e >= sorted.back()) continue;
      if (edges.empty() || e > edges.back()) edges.push_back(e);
    }
    spec.edges.push_back(std::move(edges));
  }
  return spec;
}

int DiscretizationSpec::bin(std::size_t feature, double x) const {
  const auto& e = edges[feature];
  return static_cast<int>(std::lower_bound(e.begin(), e.end(), x) - e.begin());
}

}  // namespace hybridseq
