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

// Letter-sequence entropy over the 26-letter alphabet, or 27 symbols with a
// word space. Adding the space grows H_0 but lowers H_n for n > 0 on
// English text, the same effect hypertags are meant to have on tag streams.

#ifndef HYPERTAG_LETTERS_H_
#define HYPERTAG_LETTERS_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "hypertag/entropy.h"
#include "hypertag/tagset.h"

namespace hypertag {

// Ids 0..25 are A..Z; id 26 is SPACE when present.
inline constexpr SymbolId kSpaceSymbol = 26;

Tagset LetterAlphabet(bool include_space);

struct LetterStream {
  std::vector<SymbolId> symbols;
  bool include_space = false;
  std::size_t dropped_digits = 0;
  std::size_t dropped_punctuation = 0;
  std::size_t dropped_other = 0;  // control and non-ASCII bytes

  std::size_t alphabet_size() const { return include_space ? 27 : 26; }
};

// Uppercases ASCII letters and drops everything else. With include_space,
// each whitespace run between letters becomes one SPACE; otherwise
// whitespace is removed. Throws InputError("no alphabetic content") on an
// empty result.
LetterStream NormalizeText(std::string_view text, bool include_space);

EntropyProfile LetterProfile(const LetterStream& stream, std::size_t max_n);

}  // namespace hypertag

#endif  // HYPERTAG_LETTERS_H_
