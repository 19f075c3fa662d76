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

#include "hypertag/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hypertag/error.h"

namespace hypertag {

bool Annotation::Covers(ClassId cls) const {
  return std::find(covered.begin(), covered.end(), cls) != covered.end();
}

void Annotation::Cover(ClassId cls) {
  if (!Covers(cls)) {
    covered.push_back(cls);
    std::sort(covered.begin(), covered.end());
  }
}

std::vector<TokenRange> Annotation::RangesOf(ClassId cls) const {
  std::vector<TokenRange> out;
  for (const Span& s : spans) {
    if (s.cls == cls) out.push_back(s.range);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Annotation::Sort() {
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    if (a.range.begin != b.range.begin) return a.range.begin < b.range.begin;
    if (a.range.end != b.range.end) return a.range.end > b.range.end;
    return a.cls < b.cls;
  });
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
}

bool Annotation::operator==(const Annotation& other) const {
  Annotation a = *this, b = other;
  a.Sort();
  b.Sort();
  return a.spans == b.spans && a.covered == b.covered;
}

std::optional<std::string> CheckAnnotation(const Annotation& annotation,
                                           std::size_t sentence_length) {
  const auto& spans = annotation.spans;
  for (const Span& s : spans) {
    if (s.range.begin >= s.range.end || s.range.end > sentence_length) {
      return "span [" + std::to_string(s.range.begin) + "," +
             std::to_string(s.range.end) + ") out of bounds for length " +
             std::to_string(sentence_length);
    }
  }
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      const TokenRange& a = spans[i].range;
      const TokenRange& b = spans[j].range;
      bool overlap = a.begin < b.end && b.begin < a.end;
      if (!overlap) continue;
      if (spans[i].cls == spans[j].cls) {
        return "overlapping spans of one class at [" +
               std::to_string(a.begin) + "," + std::to_string(a.end) +
               ") and [" + std::to_string(b.begin) + "," +
               std::to_string(b.end) + ")";
      }
      bool nested = (a.begin <= b.begin && b.end <= a.end) ||
                    (b.begin <= a.begin && a.end <= b.end);
      if (!nested) {
        return "crossing spans [" + std::to_string(a.begin) + "," +
               std::to_string(a.end) + ") and [" + std::to_string(b.begin) +
               "," + std::to_string(b.end) + ")";
      }
    }
  }
  return std::nullopt;
}

Corpus ParseCorpus(std::istream& in, const Tagset& tagset) {
  Corpus corpus{tagset, {}, {}};
  std::vector<ClassId> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok.front() == '#') continue;

    TaggedSentence sentence;
    Annotation annotation;
    std::vector<std::pair<ClassId, std::size_t>> open;
    bool bare_tags = false;
    do {
      if (tok == "]") {
        if (open.empty()) throw InputError("unmatched ']'", lineno);
        auto [cls, begin] = open.back();
        open.pop_back();
        if (begin == sentence.size()) {
          throw InputError("empty bracket [" + tagset.class_name(cls), lineno);
        }
        annotation.spans.push_back({cls, {begin, sentence.size()}});
        continue;
      }
      if (tok.front() == '[' && tok.find('/') == std::string::npos) {
        std::string name = tok.substr(1);
        if (name.empty()) throw InputError("malformed bracket '['", lineno);
        auto cls = tagset.FindClass(name);
        if (!cls) throw InputError("unknown class '" + name + "'", lineno);
        open.emplace_back(*cls, sentence.size());
        if (std::find(seen.begin(), seen.end(), *cls) == seen.end()) {
          seen.push_back(*cls);
        }
        continue;
      }

      std::string tag_name = tok;
      std::string word;
      auto slash = tok.rfind('/');
      if (slash != std::string::npos) {
        if (slash == 0 || slash + 1 == tok.size()) {
          throw InputError("malformed token '" + tok + "'", lineno);
        }
        word = tok.substr(0, slash);
        tag_name = tok.substr(slash + 1);
      }
      bool has_word = slash != std::string::npos;
      if (!sentence.tags.empty() && has_word == bare_tags) {
        throw InputError("mixed word/TAG and bare TAG tokens", lineno);
      }
      bare_tags = !has_word;

      auto id = tagset.Find(tag_name);
      if (!id) {
        throw InputError("unknown tag '" + tag_name + "' in token '" + tok + "'",
                         lineno);
      }
      if (tagset.is_hypertag(*id)) {
        throw InputError("hypertag '" + tag_name + "' not allowed in input",
                         lineno);
      }
      sentence.tags.push_back(*id);
      if (has_word) sentence.words.push_back(std::move(word));
    } while (tokens >> tok);

    if (!open.empty()) {
      throw InputError(
          "unclosed bracket [" + tagset.class_name(open.back().first), lineno);
    }
    if (sentence.tags.empty()) throw InputError("empty sentence", lineno);
    if (auto problem = CheckAnnotation(annotation, sentence.size())) {
      throw InputError(*problem, lineno);
    }
    annotation.Sort();
    corpus.sentences.push_back(std::move(sentence));
    corpus.annotations.push_back(std::move(annotation));
  }
  // A class bracketed anywhere is gold for the whole file.
  for (auto& a : corpus.annotations) {
    for (ClassId cls : seen) a.Cover(cls);
  }
  return corpus;
}

Corpus ReadCorpusFile(const std::string& path, const Tagset& tagset) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file " + path);
  return ParseCorpus(in, tagset);
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  const Tagset& tagset = corpus.tagset;
  for (std::size_t s = 0; s < corpus.sentences.size(); ++s) {
    const TaggedSentence& sentence = corpus.sentences[s];
    Annotation annotation = s < corpus.annotations.size()
                                ? corpus.annotations[s]
                                : Annotation{};
    annotation.Sort();

    std::vector<std::string> parts;
    std::vector<std::size_t> ends;  // stack of open span ends
    std::size_t next = 0;
    for (std::size_t i = 0; i <= sentence.size(); ++i) {
      while (!ends.empty() && ends.back() == i) {
        parts.push_back("]");
        ends.pop_back();
      }
      if (i == sentence.size()) break;
      for (; next < annotation.spans.size() &&
             annotation.spans[next].range.begin == i;
           ++next) {
        parts.push_back("[" + tagset.class_name(annotation.spans[next].cls));
        ends.push_back(annotation.spans[next].range.end);
      }
      std::string tok = tagset.name(sentence.tags[i]);
      if (sentence.has_words()) tok = sentence.words[i] + "/" + tok;
      parts.push_back(std::move(tok));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out << ' ';
      out << parts[i];
    }
    out << '\n';
  }
}

CorpusStats ComputeStats(const Corpus& corpus) {
  if (corpus.sentences.empty()) throw DataError("empty corpus");
  std::size_t tokens = 0;
  for (const auto& s : corpus.sentences) tokens += s.size();
  CorpusStats stats;
  stats.sentences = corpus.sentences.size();
  stats.mean_length =
      static_cast<double>(tokens) / static_cast<double>(stats.sentences);
  stats.tagset_size = corpus.tagset.size();
  return stats;
}

std::string RenderTags(std::span<const SymbolId> tags, const Tagset& tagset) {
  std::string out;
  for (SymbolId id : tags) {
    if (!out.empty()) out += ' ';
    out += tagset.name(id);
  }
  return out;
}

}  // namespace hypertag
