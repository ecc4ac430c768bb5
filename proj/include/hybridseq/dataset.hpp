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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hybridseq {

enum class SplitTag { train, validation, test };

const char* split_name(SplitTag tag);

/// One aligned observation stream. Text corpora have a single discrete
/// feature; signal corpora have one feature per channel, and when the
/// prediction target differs from the input (the event indicator column)
/// a parallel target id sequence of the same length.
struct Sequence {
  std::size_t length = 0;
  std::size_t n_features = 1;
  std::vector<int> ids;       // length * n_features, time-major; empty if continuous-only
  std::vector<double> reals;  // length * n_features when continuous features are kept
  std::vector<int> targets;   // length, present only when target differs from input

  bool discrete() const { return !ids.empty(); }

  std::span<const int> ids_at(std::size_t t) const {
    return {ids.data() + t * n_features, n_features};
  }
  std::span<const double> reals_at(std::size_t t) const {
    return {reals.data() + t * n_features, n_features};
  }

  /// Prediction label for position t: the explicit target when present,
  /// the (single) input symbol otherwise.
  int label_at(std::size_t t) const {
    return targets.empty() ? ids[t * n_features] : targets[t];
  }
};

struct SequenceDataset {
  std::vector<Sequence> sequences;
  std::vector<std::size_t> vocab;  // per-feature vocab sizes (empty for continuous-only)
  std::size_t target_vocab = 0;    // label vocab: vocab[0] for text, indicator vocab for signals
  SplitTag split_tag = SplitTag::train;

  std::size_t total_length() const;
  std::size_t n_features() const {
    return sequences.empty() ? vocab.size() : sequences.front().n_features;
  }
  /// Sum of per-feature vocab sizes = dense multi-hot input width.
  std::size_t input_width() const;
};

/// Cut one stream into contiguous train/validation/test segments.
/// Validation and test sizes round down; the remainder goes to train.
/// Fractions must be positive and sum to 1 within 1e-9, and no split may
/// come out empty.
std::array<std::pair<std::size_t, std::size_t>, 3> split_bounds(
    std::size_t n, const std::array<double, 3>& fractions);

std::array<SequenceDataset, 3> split_dataset(const SequenceDataset& source,
                                             const std::array<double, 3>& fractions);

/// One training step worth of windows: `n_lanes` parallel lanes, each with
/// `seq_len` (input, next-label) pairs from the same source sequence.
/// `positions` holds the flat time index of every input so callers can line
/// up externally computed per-position features.
struct BatchWindow {
  std::size_t sequence_index = 0;
  std::size_t n_lanes = 0;
  std::size_t seq_len = 0;
  std::size_t n_features = 1;
  bool lane_start = false;            // first window of its lanes: reset carried state
  std::vector<int> inputs;            // n_lanes * seq_len * n_features
  std::vector<int> labels;            // n_lanes * seq_len
  std::vector<std::size_t> positions; // n_lanes * seq_len

  std::span<const int> input_at(std::size_t lane, std::size_t step) const {
    return {inputs.data() + (lane * seq_len + step) * n_features, n_features};
  }
  int label_at(std::size_t lane, std::size_t step) const {
    return labels[lane * seq_len + step];
  }
  std::size_t position_at(std::size_t lane, std::size_t step) const {
    return positions[lane * seq_len + step];
  }
};

/// Non-overlapping next-label windows over every sequence in the dataset.
/// Each sequence is carved into `batch_size` contiguous lanes; windows are
/// emitted lane-parallel and carry state across consecutive windows of the
/// same lanes. Trailing remainders shorter than a full window are dropped.
/// Throws InsufficientData when no sequence yields a single window.
std::vector<BatchWindow> make_batches(const SequenceDataset& dataset,
                                      std::size_t seq_len, std::size_t batch_size);

}  // namespace hybridseq
