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

#include "hypertag/tagset.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hypertag/error.h"

namespace hypertag {
namespace {

// Names must survive the whitespace-separated file formats and must not be
// mistaken for annotation brackets, word/TAG tokens or hypertags.
void CheckName(const std::string& name, std::string_view what) {
  if (name.empty()) throw ConfigError("empty " + std::string(what) + " name");
  for (unsigned char ch : name) {
    if (std::isspace(ch) || ch == '/') {
      throw ConfigError("invalid character in " + std::string(what) +
                        " name '" + name + "'");
    }
  }
  if (name.front() == '[' || name.front() == '<' || name.front() == '#' ||
      name == "]") {
    throw ConfigError("reserved " + std::string(what) + " name '" + name +
                      "'");
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view KindName(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kPosTag:
      return "pos-tag";
    case SymbolKind::kPunctuation:
      return "punctuation-tag";
    case SymbolKind::kHypertagOpen:
      return "hypertag-open";
    case SymbolKind::kHypertagClose:
      return "hypertag-close";
  }
  return "unknown";
}

std::string Tagset::OpenName(std::string_view class_name) {
  return "<" + std::string(class_name) + ">";
}

std::string Tagset::CloseName(std::string_view class_name) {
  return "</" + std::string(class_name) + ">";
}

Tagset Tagset::Build(std::span<const std::string> pos_names,
                     std::span<const std::string> punct_names,
                     std::span<const std::string> class_names) {
  Tagset t;
  auto add = [&t](const std::string& name, SymbolKind kind) {
    auto id = static_cast<SymbolId>(t.names_.size());
    if (!t.index_.emplace(name, id).second) {
      throw ConfigError("duplicate symbol " + name);
    }
    t.names_.push_back(name);
    t.kinds_.push_back(kind);
    return id;
  };
  for (const auto& name : pos_names) {
    CheckName(name, "tag");
    add(name, SymbolKind::kPosTag);
  }
  for (const auto& name : punct_names) {
    CheckName(name, "punctuation");
    add(name, SymbolKind::kPunctuation);
  }
  for (const auto& name : class_names) {
    CheckName(name, "class");
    if (std::find(t.class_names_.begin(), t.class_names_.end(), name) !=
        t.class_names_.end()) {
      throw ConfigError("duplicate class " + name);
    }
    t.class_names_.push_back(name);
    HypertagPair pair;
    pair.open = add(OpenName(name), SymbolKind::kHypertagOpen);
    pair.close = add(CloseName(name), SymbolKind::kHypertagClose);
    t.pairs_.push_back(pair);
  }
  if (t.size() < 2) {
    throw ConfigError("tagset needs at least two symbols, got " +
                      std::to_string(t.size()));
  }
  return t;
}

Tagset Tagset::Parse(std::istream& in) {
  std::vector<std::string> pos, punct, classes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    std::string directive, name, extra;
    fields >> directive >> name;
    if (name.empty() || (fields >> extra)) {
      throw ConfigError("tagset line " + std::to_string(lineno) +
                        ": expected '<directive> <name>'");
    }
    if (directive == "pos") {
      pos.push_back(name);
    } else if (directive == "punct") {
      punct.push_back(name);
    } else if (directive == "class") {
      classes.push_back(name);
    } else {
      throw ConfigError("tagset line " + std::to_string(lineno) +
                        ": unknown directive '" + directive + "'");
    }
  }
  return Build(pos, punct, classes);
}

Tagset Tagset::ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open tagset file " + path);
  return Parse(in);
}

bool Tagset::is_hypertag(SymbolId id) const {
  SymbolKind k = kind(id);
  return k == SymbolKind::kHypertagOpen || k == SymbolKind::kHypertagClose;
}

std::optional<SymbolId> Tagset::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolId Tagset::Lookup(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw ConfigError("unknown tag " + std::string(name));
}

std::optional<ClassId> Tagset::FindClass(std::string_view name) const {
  auto it = std::find(class_names_.begin(), class_names_.end(), name);
  if (it == class_names_.end()) return std::nullopt;
  return static_cast<ClassId>(it - class_names_.begin());
}

std::optional<ClassId> Tagset::class_of(SymbolId id) const {
  if (!is_hypertag(id)) return std::nullopt;
  for (ClassId c = 0; c < pairs_.size(); ++c) {
    if (pairs_[c].open == id || pairs_[c].close == id) return c;
  }
  return std::nullopt;
}

std::vector<SymbolId> Tagset::SymbolsOfKind(SymbolKind k) const {
  std::vector<SymbolId> out;
  for (SymbolId id = 0; id < size(); ++id) {
    if (kinds_[id] == k) out.push_back(id);
  }
  return out;
}

}  // namespace hypertag
