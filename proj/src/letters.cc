// Copyright 2026 The Hypertag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypertag/letters.h"

#include <string>

#include "hypertag/error.h"

namespace hypertag {

Tagset LetterAlphabet(bool include_space) {
  std::vector<std::string> letters;
  for (char c = 'A'; c <= 'Z'; ++c) letters.emplace_back(1, c);
  std::vector<std::string> space;
  if (include_space) space.emplace_back("SPACE");
  return Tagset::Build(letters, space, {});
}

LetterStream NormalizeText(std::string_view text, bool include_space) {
  LetterStream out;
  out.include_space = include_space;
  bool pending_space = false;
  for (char raw : text) {
    auto ch = static_cast<unsigned char>(raw);
    if (ch >= 'a' && ch <= 'z') ch = static_cast<unsigned char>(ch - 'a' + 'A');
    if (ch >= 'A' && ch <= 'Z') {
      if (pending_space && !out.symbols.empty()) {
        out.symbols.push_back(kSpaceSymbol);
      }
      pending_space = false;
      out.symbols.push_back(static_cast<SymbolId>(ch - 'A'));
    } else if (ch == ' ' || (ch >= '\t' && ch <= '\r')) {
      pending_space = include_space;
    } else if (ch >= '0' && ch <= '9') {
      ++out.dropped_digits;
    } else if (ch >= 0x21 && ch <= 0x7e) {
      ++out.dropped_punctuation;
    } else {
      ++out.dropped_other;
    }
  }
  if (out.symbols.empty()) throw InputError("no alphabetic content");
  return out;
}

EntropyProfile LetterProfile(const LetterStream& stream, std::size_t max_n) {
  return Profile(stream.symbols, stream.alphabet_size(), max_n);
}

}  // namespace hypertag
