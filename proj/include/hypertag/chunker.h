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

// A small finite-state chunker that finds noun groups (modifier* noun) and
// the subject of a declarative sentence, and splits a sentence into
// pre-subject, subject and predicate sections around it.
//
// Subject rule: take the first finite verb; the subject runs from the first
// qualifying noun group before it (extended left over determiners) up to the
// token before the verb. A noun group directly after a preposition does not
// qualify. With no qualifying noun group, or a sentence-initial finite verb,
// the subject is empty at the verb. Embedded finite verbs inside the subject
// truncate it; gold annotations are needed for those.

#ifndef HYPERTAG_CHUNKER_H_
#define HYPERTAG_CHUNKER_H_

#include <istream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hypertag/corpus.h"
#include "hypertag/tagset.h"

namespace hypertag {

struct ChunkRules {
  std::set<SymbolId> modifiers;
  std::set<SymbolId> nouns;
  std::set<SymbolId> finite_verbs;
  std::set<SymbolId> determiners;
  std::set<SymbolId> prepositions;

  // All sets hold part-of-speech tags; nouns and finite verbs are disjoint.
  void Validate(const Tagset& tagset) const;
};

// Directives, one per line: `modifier <tag>`, `noun <tag>`,
// `finite-verb <tag>`, `determiner <tag>`, `preposition <tag>`.
ChunkRules ParseChunkRules(std::istream& in, const Tagset& tagset);
ChunkRules ReadChunkRulesFile(const std::string& path, const Tagset& tagset);

// Maximal, disjoint, left-to-right spans of the form modifier* noun.
std::vector<TokenRange> FindNounGroups(std::span<const SymbolId> sentence,
                                       const ChunkRules& rules);

// Throws ChunkError("no finite verb") when the sentence has none.
TokenRange FindSubject(std::span<const SymbolId> sentence,
                       const ChunkRules& rules);

struct SentenceSections {
  TokenRange pre_subject;
  TokenRange subject;
  TokenRange predicate;
};

SentenceSections SplitSections(std::size_t sentence_length,
                               TokenRange subject);

}  // namespace hypertag

#endif  // HYPERTAG_CHUNKER_H_
