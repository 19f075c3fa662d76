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

// Hypertagging schemes: deterministic rewrites of a raw tag sequence that
// insert open/close hypertags around constituents. The six schemes and their
// report suffixes:
//
//   p   plain, no hypertags
//   a   arbitrary: open before position 2, close after position 5 (1-based)
//   d   each determiner d becomes open d close
//   n   noun groups bracketed
//   s   subject bracketed
//   sn  subject and noun groups, noun groups nested inside the subject

#ifndef HYPERTAG_SCHEMES_H_
#define HYPERTAG_SCHEMES_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypertag/corpus.h"
#include "hypertag/tagset.h"

namespace hypertag {

enum class SchemeKind {
  kPlain,
  kArbitrary,
  kDeterminer,
  kNounGroup,
  kSubject,
  kSubjectAndNounGroup,
};

// All kinds in report order p, a, d, n, s, sn.
std::span<const SchemeKind> AllSchemeKinds();
std::string_view Suffix(SchemeKind kind);
std::optional<SchemeKind> SchemeFromSuffix(std::string_view suffix);
// Parses "p,a,sn"; throws ConfigError on unknown suffixes.
std::vector<SchemeKind> ParseSchemeList(std::string_view list);

// Which constituent class's hypertag pair each role uses.
struct SchemeBindings {
  ClassId subject = 0;
  ClassId noun_group = 0;
  ClassId arbitrary = 0;
  ClassId determiner = 0;
};

// Binds `subject` and `noun_group` classes by name; the arbitrary scheme
// borrows the subject pair and the determiner scheme the noun-group pair.
SchemeBindings DefaultBindings(const Tagset& tagset);

struct Scheme {
  SchemeKind kind = SchemeKind::kPlain;
  SchemeBindings bindings;
  std::set<SymbolId> determiner_tags;

  // Classes whose spans the scheme reads from an annotation.
  std::vector<ClassId> RequiredClasses() const;
  // Throws ConfigError if the scheme emits two roles with one pair.
  void Validate(const Tagset& tagset) const;
};

// A constituent to bracket. Where two brackets cover the same range the one
// with the lower rank goes outermost. Empty ranges emit open,close.
struct Bracket {
  ClassId cls = 0;
  TokenRange range;
  int rank = 0;
};

// Inserts hypertags around non-crossing brackets. Throws ConfigError on
// crossing or out-of-range brackets.
std::vector<SymbolId> InsertHypertags(std::span<const SymbolId> raw,
                                      std::vector<Bracket> brackets,
                                      const Tagset& tagset);

// Throws InputError if the annotation lacks a class the scheme needs.
std::vector<SymbolId> ApplyScheme(std::span<const SymbolId> raw,
                                  const Annotation& annotation,
                                  const Scheme& scheme, const Tagset& tagset);

struct BracketViolation {
  std::size_t index;  // offending position; size() for end of sentence
  std::string description;
};

// Checks that hypertags are balanced per class and properly nested.
std::optional<BracketViolation> ValidateBrackets(
    std::span<const SymbolId> sequence, const Tagset& tagset);

std::vector<SymbolId> StripHypertags(std::span<const SymbolId> sequence,
                                     const Tagset& tagset);

}  // namespace hypertag

#endif  // HYPERTAG_SCHEMES_H_
