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

#include "hypertag/chunker.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hypertag/error.h"

namespace hypertag {

void ChunkRules::Validate(const Tagset& tagset) const {
  auto check = [&tagset](const std::set<SymbolId>& ids, const char* what) {
    for (SymbolId id : ids) {
      if (id >= tagset.size() || tagset.kind(id) != SymbolKind::kPosTag) {
        throw ConfigError(std::string(what) + " rule names non-pos symbol " +
                          (id < tagset.size() ? tagset.name(id)
                                              : std::to_string(id)));
      }
    }
  };
  check(modifiers, "modifier");
  check(nouns, "noun");
  check(finite_verbs, "finite-verb");
  check(determiners, "determiner");
  check(prepositions, "preposition");
  for (SymbolId id : nouns) {
    if (finite_verbs.count(id)) {
      throw ConfigError("tag " + tagset.name(id) +
                        " is both a noun and a finite verb");
    }
  }
}

ChunkRules ParseChunkRules(std::istream& in, const Tagset& tagset) {
  ChunkRules rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string directive, tag, extra;
    if (!(fields >> directive) || directive.front() == '#') continue;
    if (!(fields >> tag) || (fields >> extra)) {
      throw ConfigError("rules line " + std::to_string(lineno) +
                        ": expected '<directive> <tag>'");
    }
    auto id = tagset.Find(tag);
    if (!id) {
      throw ConfigError("rules line " + std::to_string(lineno) +
                        ": unknown tag " + tag);
    }
    if (directive == "modifier") {
      rules.modifiers.insert(*id);
    } else if (directive == "noun") {
      rules.nouns.insert(*id);
    } else if (directive == "finite-verb") {
      rules.finite_verbs.insert(*id);
    } else if (directive == "determiner") {
      rules.determiners.insert(*id);
    } else if (directive == "preposition") {
      rules.prepositions.insert(*id);
    } else {
      throw ConfigError("rules line " + std::to_string(lineno) +
                        ": unknown directive '" + directive + "'");
    }
  }
  rules.Validate(tagset);
  return rules;
}

ChunkRules ReadChunkRulesFile(const std::string& path, const Tagset& tagset) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rules file " + path);
  return ParseChunkRules(in, tagset);
}

std::vector<TokenRange> FindNounGroups(std::span<const SymbolId> sentence,
                                       const ChunkRules& rules) {
  std::vector<TokenRange> groups;
  const std::size_t n = sentence.size();
  std::size_t i = 0;
  while (i < n) {
    // Longest run of modifier-or-noun tags starting at i, cut back to its
    // last noun.
    std::size_t j = i;
    std::size_t last_noun = n;
    while (j < n && (rules.modifiers.count(sentence[j]) ||
                     rules.nouns.count(sentence[j]))) {
      if (rules.nouns.count(sentence[j])) last_noun = j;
      ++j;
    }
    if (last_noun != n) {
      groups.push_back({i, last_noun + 1});
      i = last_noun + 1;
    } else {
      i = std::max(i + 1, j);
    }
  }
  return groups;
}

TokenRange FindSubject(std::span<const SymbolId> sentence,
                       const ChunkRules& rules) {
  auto verb = std::find_if(sentence.begin(), sentence.end(), [&](SymbolId t) {
    return rules.finite_verbs.count(t) > 0;
  });
  if (verb == sentence.end()) throw ChunkError("no finite verb");
  const std::size_t v = static_cast<std::size_t>(verb - sentence.begin());

  for (const TokenRange& group : FindNounGroups(sentence.first(v), rules)) {
    std::size_t begin = group.begin;
    while (begin > 0 && rules.determiners.count(sentence[begin - 1])) --begin;
    if (begin > 0 && rules.prepositions.count(sentence[begin - 1])) continue;
    return {begin, v};
  }
  return {v, v};
}

SentenceSections SplitSections(std::size_t sentence_length,
                               TokenRange subject) {
  if (subject.begin > subject.end || subject.end > sentence_length) {
    throw ChunkError("subject span out of range");
  }
  return {{0, subject.begin}, subject, {subject.end, sentence_length}};
}

}  // namespace hypertag
