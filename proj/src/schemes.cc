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

#include "hypertag/schemes.h"

#include <algorithm>
#include <array>

#include "hypertag/error.h"

namespace hypertag {
namespace {

constexpr std::array<SchemeKind, 6> kAllKinds = {
    SchemeKind::kPlain,     SchemeKind::kArbitrary,
    SchemeKind::kDeterminer, SchemeKind::kNounGroup,
    SchemeKind::kSubject,   SchemeKind::kSubjectAndNounGroup,
};

std::string RangeText(TokenRange r) {
  return "[" + std::to_string(r.begin) + "," + std::to_string(r.end) + ")";
}

void AddRanges(const Annotation& annotation, ClassId cls, int rank,
               const Tagset& tagset, std::span<const SymbolId> raw,
               SchemeKind kind, std::vector<Bracket>& out) {
  if (!annotation.Covers(cls)) {
    throw InputError("annotation has no '" + tagset.class_name(cls) +
                     "' spans for scheme " + std::string(Suffix(kind)) +
                     " in sentence: " + RenderTags(raw, tagset));
  }
  for (TokenRange r : annotation.RangesOf(cls)) out.push_back({cls, r, rank});
}

}  // namespace

std::span<const SchemeKind> AllSchemeKinds() { return kAllKinds; }

std::string_view Suffix(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kPlain:
      return "p";
    case SchemeKind::kArbitrary:
      return "a";
    case SchemeKind::kDeterminer:
      return "d";
    case SchemeKind::kNounGroup:
      return "n";
    case SchemeKind::kSubject:
      return "s";
    case SchemeKind::kSubjectAndNounGroup:
      return "sn";
  }
  return "?";
}

std::optional<SchemeKind> SchemeFromSuffix(std::string_view suffix) {
  for (SchemeKind k : kAllKinds) {
    if (Suffix(k) == suffix) return k;
  }
  return std::nullopt;
}

std::vector<SchemeKind> ParseSchemeList(std::string_view list) {
  std::vector<SchemeKind> out;
  while (true) {
    auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    if (!item.empty()) {
      auto kind = SchemeFromSuffix(item);
      if (!kind) throw ConfigError("unknown scheme '" + std::string(item) + "'");
      out.push_back(*kind);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

SchemeBindings DefaultBindings(const Tagset& tagset) {
  auto subject = tagset.FindClass("subject");
  auto noun_group = tagset.FindClass("noun_group");
  if (!subject || !noun_group) {
    throw ConfigError(
        "tagset must declare classes 'subject' and 'noun_group'");
  }
  return {*subject, *noun_group, *subject, *noun_group};
}

std::vector<ClassId> Scheme::RequiredClasses() const {
  switch (kind) {
    case SchemeKind::kNounGroup:
      return {bindings.noun_group};
    case SchemeKind::kSubject:
      return {bindings.subject};
    case SchemeKind::kSubjectAndNounGroup:
      return {bindings.subject, bindings.noun_group};
    default:
      return {};
  }
}

void Scheme::Validate(const Tagset& tagset) const {
  for (ClassId c : {bindings.subject, bindings.noun_group, bindings.arbitrary,
                    bindings.determiner}) {
    if (c >= tagset.num_classes()) {
      throw ConfigError("scheme binds class " + std::to_string(c) +
                        " missing from tagset");
    }
  }
  if (kind == SchemeKind::kSubjectAndNounGroup &&
      bindings.subject == bindings.noun_group) {
    throw ConfigError("scheme sn needs distinct subject and noun-group pairs");
  }
  for (SymbolId id : determiner_tags) {
    if (id >= tagset.size() || tagset.is_hypertag(id)) {
      throw ConfigError("determiner tag must be an ordinary tag");
    }
  }
}

std::vector<SymbolId> InsertHypertags(std::span<const SymbolId> raw,
                                      std::vector<Bracket> brackets,
                                      const Tagset& tagset) {
  const std::size_t n = raw.size();
  for (const Bracket& b : brackets) {
    if (b.range.begin > b.range.end || b.range.end > n) {
      throw ConfigError("bracket " + RangeText(b.range) +
                        " out of range for length " + std::to_string(n));
    }
    if (b.cls >= tagset.num_classes()) {
      throw ConfigError("bracket class missing from tagset");
    }
  }
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    for (std::size_t j = i + 1; j < brackets.size(); ++j) {
      TokenRange a = brackets[i].range, b = brackets[j].range;
      if (a.empty() || b.empty()) continue;
      bool cross = (a.begin < b.begin && b.begin < a.end && a.end < b.end) ||
                   (b.begin < a.begin && a.begin < b.end && b.end < a.end);
      if (cross) {
        throw ConfigError("crossing brackets " + RangeText(a) + " and " +
                          RangeText(b));
      }
    }
  }
  std::stable_sort(brackets.begin(), brackets.end(),
                   [](const Bracket& x, const Bracket& y) {
                     if (x.range.begin != y.range.begin) {
                       return x.range.begin < y.range.begin;
                     }
                     if (x.range.empty() != y.range.empty()) {
                       return x.range.empty();
                     }
                     if (x.range.end != y.range.end) {
                       return x.range.end > y.range.end;
                     }
                     if (x.rank != y.rank) return x.rank < y.rank;
                     return x.cls < y.cls;
                   });

  std::vector<SymbolId> out;
  out.reserve(n + 2 * brackets.size());
  std::vector<const Bracket*> open;
  std::size_t next = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    while (!open.empty() && open.back()->range.end == i) {
      out.push_back(tagset.pair(open.back()->cls).close);
      open.pop_back();
    }
    // Empty brackets come first, so they sit outside spans opening here.
    for (; next < brackets.size() && brackets[next].range.begin == i;
         ++next) {
      const Bracket& b = brackets[next];
      out.push_back(tagset.pair(b.cls).open);
      if (b.range.empty()) {
        out.push_back(tagset.pair(b.cls).close);
      } else {
        open.push_back(&b);
      }
    }
    if (i < n) out.push_back(raw[i]);
  }
  return out;
}

std::vector<SymbolId> ApplyScheme(std::span<const SymbolId> raw,
                                  const Annotation& annotation,
                                  const Scheme& scheme, const Tagset& tagset) {
  for (SymbolId id : raw) {
    if (tagset.is_hypertag(id)) {
      throw InputError("scheme input already contains hypertags: " +
                       RenderTags(raw, tagset));
    }
  }
  const SchemeBindings& b = scheme.bindings;
  std::vector<Bracket> brackets;
  switch (scheme.kind) {
    case SchemeKind::kPlain:
      return {raw.begin(), raw.end()};
    case SchemeKind::kArbitrary:
      if (raw.size() == 1) {
        brackets.push_back({b.arbitrary, {1, 1}, 0});
      } else if (!raw.empty()) {
        brackets.push_back(
            {b.arbitrary, {1, std::min<std::size_t>(5, raw.size())}, 0});
      }
      break;
    case SchemeKind::kDeterminer:
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (scheme.determiner_tags.count(raw[i])) {
          brackets.push_back({b.determiner, {i, i + 1}, 0});
        }
      }
      break;
    case SchemeKind::kNounGroup:
      AddRanges(annotation, b.noun_group, 0, tagset, raw, scheme.kind,
                brackets);
      break;
    case SchemeKind::kSubject:
      AddRanges(annotation, b.subject, 0, tagset, raw, scheme.kind, brackets);
      break;
    case SchemeKind::kSubjectAndNounGroup:
      AddRanges(annotation, b.subject, 0, tagset, raw, scheme.kind, brackets);
      AddRanges(annotation, b.noun_group, 1, tagset, raw, scheme.kind,
                brackets);
      break;
  }
  return InsertHypertags(raw, std::move(brackets), tagset);
}

std::optional<BracketViolation> ValidateBrackets(
    std::span<const SymbolId> sequence, const Tagset& tagset) {
  std::vector<ClassId> open;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    SymbolId id = sequence[i];
    if (id >= tagset.size()) {
      return BracketViolation{i, "symbol id outside the tagset"};
    }
    auto cls = tagset.class_of(id);
    if (!cls) continue;
    if (tagset.kind(id) == SymbolKind::kHypertagOpen) {
      open.push_back(*cls);
      continue;
    }
    if (std::find(open.begin(), open.end(), *cls) == open.end()) {
      return BracketViolation{i, "close " + tagset.name(id) + " without open"};
    }
    if (open.back() != *cls) {
      return BracketViolation{i, "close " + tagset.name(id) + " crosses open " +
                                     tagset.name(tagset.pair(open.back()).open)};
    }
    open.pop_back();
  }
  if (!open.empty()) {
    return BracketViolation{sequence.size(),
                            "unclosed " + tagset.name(tagset.pair(open.back()).open)};
  }
  return std::nullopt;
}

std::vector<SymbolId> StripHypertags(std::span<const SymbolId> sequence,
                                     const Tagset& tagset) {
  std::vector<SymbolId> out;
  for (SymbolId id : sequence) {
    if (!tagset.is_hypertag(id)) out.push_back(id);
  }
  return out;
}

}  // namespace hypertag
