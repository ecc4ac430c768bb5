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

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hybridseq {

/// Decode UTF-8 into unicode scalar values. Invalid bytes become U+FFFD.
std::u32string utf8_decode(std::string_view bytes);

/// Encode unicode scalar values back to UTF-8.
std::string utf8_encode(std::u32string_view text);

/// Bijection between observed characters and contiguous integer ids.
/// Ids 0..V-2 are the distinct symbols in first-appearance order over the
/// training stream; id V-1 is reserved for unseen symbols.
class SymbolTable {
 public:
  /// Build from a training stream. Throws EmptyInput on an empty stream.
  static SymbolTable build(std::u32string_view training_text);

  /// Reconstruct from an explicit symbol list (checkpoint loading).
  static SymbolTable from_symbols(std::vector<char32_t> symbols);

  /// Total id count V, including the unknown id.
  std::size_t size() const { return symbols_.size() + 1; }

  int unk_id() const { return static_cast<int>(symbols_.size()); }

  /// Id for a symbol; unseen symbols map to unk_id().
  int encode_symbol(char32_t c) const;

  /// Symbol for an id < V-1; the unknown id decodes to U+FFFD.
  char32_t decode_symbol(int id) const;

  std::vector<int> encode(std::u32string_view text) const;
  std::u32string decode(std::span<const int> ids) const;

  /// Count of ids in `text` that would map to unk.
  std::size_t count_unknown(std::u32string_view text) const;

  /// Symbols in first-appearance order, without the unk slot.
  const std::vector<char32_t>& symbols() const { return symbols_; }

 private:
  std::vector<char32_t> symbols_;
  std::unordered_map<char32_t, int> index_;
};

}  // namespace hybridseq
