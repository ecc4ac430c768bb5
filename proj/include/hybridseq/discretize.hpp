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
#include <vector>

namespace hybridseq {

/// Per-feature equal-frequency binning. Edges are empirical quantiles at
/// k/n_bins (k = 1..n_bins-1, linear interpolation) computed on the training
/// split only; duplicate quantiles collapse, so constant features end up with
/// a single bin.
struct DiscretizationSpec {
  std::vector<std::vector<double>> edges;  // strictly ascending per feature
  std::size_t requested_bins = 0;

  /// Fit on per-feature training series. Throws InvalidConfig for n_bins < 2
  /// and EmptyInput for an empty series.
  static DiscretizationSpec fit(const std::vector<std::vector<double>>& series,
                                std::size_t n_bins);

  std::size_t n_features() const { return edges.size(); }

  /// Bin count for one feature (edges + 1).
  std::size_t bins(std::size_t feature) const { return edges[feature].size() + 1; }

  /// Bin index for a value: the number of edges strictly below x. Values on
  /// an edge bin to its left; every real maps to exactly one bin.
  int bin(std::size_t feature, double x) const;
};

}  // namespace hybridseq
