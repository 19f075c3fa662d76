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

// Pre-tagged corpora. One sentence per line; each token is `TAG` or
// `word/TAG`, and `[class ... ]` brackets may wrap runs of tokens to give
// gold constituent spans. Lines starting with `#` are comments.
//
//   [subject the/DET [noun_group shirt/NOUN ] ] is/BE ./STOP

#ifndef HYPERTAG_CORPUS_H_
#define HYPERTAG_CORPUS_H_

#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hypertag/tagset.h"

namespace hypertag {

// Half-open token range [begin, end).
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  auto operator<=>(const TokenRange&) const = default;
};

// A labelled constituent over raw sentence indices.
struct Span {
  ClassId cls = 0;
  TokenRange range;

  auto operator<=>(const Span&) const = default;
};

struct Annotation {
  std::vector<Span> spans;
  // Classes this annotation speaks for. A covered class with no spans means
  // "this sentence has none", which differs from "unknown".
  std::vector<ClassId> covered;

  bool Covers(ClassId cls) const;
  void Cover(ClassId cls);
  std::vector<TokenRange> RangesOf(ClassId cls) const;
  // Canonical order: by begin, longer first, then class.
  void Sort();

  bool operator==(const Annotation& other) const;
};

// Checks bounds, non-empty spans, disjointness within a class and no
// crossing between classes. Returns a description of the first problem.
std::optional<std::string> CheckAnnotation(const Annotation& annotation,
                                           std::size_t sentence_length);

struct TaggedSentence {
  std::vector<SymbolId> tags;
  // Empty, or parallel to `tags`.
  std::vector<std::string> words;

  std::size_t size() const { return tags.size(); }
  bool has_words() const { return !words.empty(); }
  bool operator==(const TaggedSentence&) const = default;
};

struct Corpus {
  Tagset tagset;
  std::vector<TaggedSentence> sentences;
  std::vector<Annotation> annotations;  // parallel to sentences
};

Corpus ParseCorpus(std::istream& in, const Tagset& tagset);
Corpus ReadCorpusFile(const std::string& path, const Tagset& tagset);

// Writes the corpus back in the input format. Annotated classes are written
// as brackets; words are kept when present.
void WriteCorpus(const Corpus& corpus, std::ostream& out);

struct CorpusStats {
  std::size_t sentences = 0;
  double mean_length = 0.0;  // punctuation tags count as tokens
  std::size_t tagset_size = 0;
};

CorpusStats ComputeStats(const Corpus& corpus);

// Space-separated tag names, for messages and debugging.
std::string RenderTags(std::span<const SymbolId> tags, const Tagset& tagset);

}  // namespace hypertag

#endif  // HYPERTAG_CORPUS_H_
