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

#include "hybridseq/symbol_table.hpp"

#include "hybridseq/errors.hpp"

namespace hybridseq {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
}

std::u32string utf8_decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto n = bytes.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

SymbolTable SymbolTable::build(std::u32string_view training_text) {
  if (training_text.empty()) throw EmptyInput("symbol table built from empty stream");
  SymbolTable t;
  for (char32_t c : training_text) {
    if (t.index_.find(c) == t.index_.end()) {
      t.index_.emplace(c, static_cast<int>(t.symbols_.size()));
      t.symbols_.push_back(c);
    }
  }
  return t;
}

SymbolTable SymbolTable::from_symbols(std::vector<char32_t> symbols) {
  if (symbols.empty()) throw EmptyInput("symbol table requires at least one symbol");
  SymbolTable t;
  t.symbols_ = std::move(symbols);
  for (std::size_t i = 0; i < t.symbols_.size(); ++i) {
    if (!t.index_.emplace(t.symbols_[i], static_cast<int>(i)).second)
      throw InvalidConfig("duplicate symbol in table");
  }
  return t;
}

int SymbolTable::encode_symbol(char32_t c) const {
  auto it = index_.find(c);
  return it == index_.end() ? unk_id() : it->second;
}

char32_t SymbolTable::decode_symbol(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= size())
    throw ShapeError("symbol id out of range");
  if (id == unk_id()) return kReplacement;
  return symbols_[static_cast<std::size_t>(id)];
}

std::vector<int> SymbolTable::encode(std::u32string_view text) const {
  std::vector<int> out;
  out.reserve(text.size());
  for (char32_t c : text) out.push_back(encode_symbol(c));
  return out;
}

std::u32string SymbolTable::decode(std::span<const int> ids) const {
  std::u32string out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(decode_symbol(id));
  return out;
}

std::size_t SymbolTable::count_unknown(std::u32string_view text) const {
  std::size_t n = 0;
  for (char32_t c : text)
    if (index_.find(c) == index_.end()) ++n;
  return n;
}

}  // namespace hybridseq
