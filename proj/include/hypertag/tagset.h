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

// The closed symbol alphabet over which all entropies are measured:
// part-of-speech tags, punctuation tags, and one open/close hypertag pair
// per constituent class. Hypertags are ordinary members of the alphabet and
// count toward its size.

#ifndef HYPERTAG_TAGSET_H_
#define HYPERTAG_TAGSET_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypertag {

using SymbolId = std::uint32_t;
using ClassId = std::size_t;

enum class SymbolKind : std::uint8_t {
  kPosTag,
  kPunctuation,
  kHypertagOpen,
  kHypertagClose,
};

std::string_view KindName(SymbolKind kind);

struct Symbol {
  SymbolId id;
  SymbolKind kind;

  bool operator==(const Symbol&) const = default;
};

struct HypertagPair {
  SymbolId open;
  SymbolId close;
};

class Tagset {
 public:
  // Ids are assigned in declaration order: part-of-speech tags, then
  // punctuation, then (open, close) for each class. Throws ConfigError on
  // duplicate or reserved names, or when fewer than two symbols result.
  static Tagset Build(std::span<const std::string> pos_names,
                      std::span<const std::string> punct_names,
                      std::span<const std::string> class_names);

  // Reads the directive format: `pos <name>`, `punct <name>`,
  // `class <name>`, one per line; `#` starts a comment line.
  static Tagset Parse(std::istream& in);
  static Tagset ReadFile(const std::string& path);

  // Hypertag symbol names generated for a class.
  static std::string OpenName(std::string_view class_name);
  static std::string CloseName(std::string_view class_name);

  std::size_t size() const { return names_.size(); }
  const std::string& name(SymbolId id) const { return names_.at(id); }
  SymbolKind kind(SymbolId id) const { return kinds_.at(id); }
  Symbol symbol(SymbolId id) const { return {id, kind(id)}; }
  bool is_hypertag(SymbolId id) const;

  std::optional<SymbolId> Find(std::string_view name) const;
  // Like Find, but throws ConfigError naming the unknown symbol.
  SymbolId Lookup(std::string_view name) const;

  std::size_t num_classes() const { return class_names_.size(); }
  const std::string& class_name(ClassId c) const { return class_names_.at(c); }
  std::optional<ClassId> FindClass(std::string_view name) const;
  HypertagPair pair(ClassId c) const { return pairs_.at(c); }
  // The class a hypertag symbol delimits; nullopt for ordinary tags.
  std::optional<ClassId> class_of(SymbolId id) const;

  std::size_t num_hypertags() const { return 2 * class_names_.size(); }
  std::vector<SymbolId> SymbolsOfKind(SymbolKind kind) const;

 private:
  std::vector<std::string> names_;
  std::vector<SymbolKind> kinds_;
  std::unordered_map<std::string, SymbolId> index_;
  std::vector<std::string> class_names_;
  std::vector<HypertagPair> pairs_;
};

}  // namespace hypertag

#endif  // HYPERTAG_TAGSET_H_
