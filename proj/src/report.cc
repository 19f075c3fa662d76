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

#include "hypertag/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypertag/entropy.h"
#include "hypertag/error.h"
#include "json.hpp"

namespace hypertag {
namespace {

using nlohmann::json;

std::string Shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double ParseDouble(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("bad number '" + std::string(s) + "'", line);
  }
  return v;
}

std::size_t ParseCount(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("bad count '" + std::string(s) + "'", line);
  }
  return v;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    auto tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return out;
}

std::string Fixed(double v, bool sign = false) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), sign ? "%+.3f" : "%.3f", v);
  return buf;
}

void RenderText(const SchemeReport& report, std::ostream& out) {
  const ReportMetadata& m = report.meta;
  out << "corpus: " << m.sentences << " sentences measured, " << m.excluded
      << " excluded, mean length " << Fixed(m.mean_length) << " tokens\n";
  out << "tagset: " << m.tagset_size << " symbols, H0 = " << Fixed(m.h0)
      << "\n";
  out << "windows: "
      << (m.per_sentence_windows ? "within sentences" : "concatenated stream")
      << "\n\n";

  auto header = [&](const char* prefix) {
    out << "     text    ";
    for (std::size_t n = 1; n <= m.max_n; ++n) {
      std::string col = prefix + std::string("H") + std::to_string(n);
      out << std::string(col.size() < 8 ? 8 - col.size() : 1, ' ') << col;
    }
    out << '\n';
  };
  auto body = [&](bool deltas) {
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
      const ReportRow& row = report.rows[r];
      std::string label = "text-" + row.label;
      char lead[32];
      std::snprintf(lead, sizeof(lead), "%3zu  %-8s", r + 1, label.c_str());
      out << lead;
      for (double v : deltas ? row.delta : row.h) {
        std::string cell = Fixed(v, deltas);
        out << std::string(cell.size() < 8 ? 8 - cell.size() : 1, ' ')
            << cell;
      }
      out << '\n';
    }
  };
  header("");
  body(false);
  out << "\nchange versus text-p\n";
  header("d");
  body(true);
}

void RenderTsv(const SchemeReport& report, std::ostream& out) {
  const ReportMetadata& m = report.meta;
  out << "# sentences\t" << m.sentences << '\n'
      << "# excluded\t" << m.excluded << '\n'
      << "# mean_length\t" << Shortest(m.mean_length) << '\n'
      << "# tagset_size\t" << m.tagset_size << '\n'
      << "# h0\t" << Shortest(m.h0) << '\n'
      << "# max_n\t" << m.max_n << '\n'
      << "# per_sentence_windows\t" << (m.per_sentence_windows ? 1 : 0)
      << '\n';
  out << "scheme";
  for (std::size_t n = 1; n <= m.max_n; ++n) out << "\tH" << n;
  for (std::size_t n = 1; n <= m.max_n; ++n) out << "\tdH" << n;
  out << '\n';
  for (const ReportRow& row : report.rows) {
    out << row.label;
    for (double v : row.h) out << '\t' << Shortest(v);
    for (double v : row.delta) out << '\t' << Shortest(v);
    out << '\n';
  }
}

void RenderJson(const SchemeReport& report, std::ostream& out) {
  const ReportMetadata& m = report.meta;
  json doc;
  doc["metadata"] = {
      {"sentences", m.sentences},
      {"excluded", m.excluded},
      {"mean_length", m.mean_length},
      {"tagset_size", m.tagset_size},
      {"h0", m.h0},
      {"max_n", m.max_n},
      {"per_sentence_windows", m.per_sentence_windows},
  };
  doc["rows"] = json::array();
  for (const ReportRow& row : report.rows) {
    doc["rows"].push_back(
        {{"scheme", row.label}, {"h", row.h}, {"delta", row.delta}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace

const ReportRow& SchemeReport::baseline() const {
  if (const ReportRow* row = Find("p")) return *row;
  throw Error("report has no plain row");
}

const ReportRow* SchemeReport::Find(std::string_view label) const {
  for (const ReportRow& row : rows) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

void SchemeReport::Validate() const {
  auto plain = std::count_if(rows.begin(), rows.end(),
                             [](const ReportRow& r) { return r.label == "p"; });
  if (plain != 1) throw Error("report needs exactly one plain row");
  for (const ReportRow& row : rows) {
    if (row.h.size() != meta.max_n || row.delta.size() != meta.max_n) {
      throw Error("row " + row.label + " has the wrong number of columns");
    }
    for (std::size_t k = 0; k < meta.max_n; ++k) {
      if (!std::isfinite(row.h[k]) || !std::isfinite(row.delta[k])) {
        throw Error("row " + row.label + " has a non-finite value");
      }
    }
  }
  for (double d : baseline().delta) {
    if (d != 0.0) throw Error("plain row has a non-zero delta");
  }
}

std::vector<std::optional<Annotation>> ResolveAnnotations(
    const Corpus& corpus, const ChunkRules& rules,
    const SchemeBindings& bindings, bool need_subject) {
  std::vector<std::optional<Annotation>> out;
  out.reserve(corpus.sentences.size());
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    const auto& tags = corpus.sentences[i].tags;
    Annotation a = i < corpus.annotations.size() ? corpus.annotations[i]
                                                 : Annotation{};
    if (!a.Covers(bindings.noun_group)) {
      for (TokenRange r : FindNounGroups(tags, rules)) {
        a.spans.push_back({bindings.noun_group, r});
      }
      a.Cover(bindings.noun_group);
    }
    if (need_subject && !a.Covers(bindings.subject)) {
      try {
        TokenRange subject = FindSubject(tags, rules);
        if (!subject.empty()) a.spans.push_back({bindings.subject, subject});
        a.Cover(bindings.subject);
      } catch (const ChunkError&) {
        out.emplace_back(std::nullopt);
        continue;
      }
    }
    if (auto problem = CheckAnnotation(a, tags.size())) {
      throw InputError("sentence " + std::to_string(i + 1) + ": " + *problem);
    }
    a.Sort();
    out.emplace_back(std::move(a));
  }
  return out;
}

std::vector<std::vector<SymbolId>> SchemeSequences(
    const Corpus& corpus,
    const std::vector<std::optional<Annotation>>& annotations,
    const Scheme& scheme) {
  std::vector<std::vector<SymbolId>> out;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    if (i >= annotations.size() || !annotations[i]) continue;
    auto seq = ApplyScheme(corpus.sentences[i].tags, *annotations[i], scheme,
                           corpus.tagset);
    if (auto bad = ValidateBrackets(seq, corpus.tagset)) {
      throw Error("scheme " + std::string(Suffix(scheme.kind)) +
                  " produced unbalanced hypertags in sentence " +
                  std::to_string(i + 1) + " at " + std::to_string(bad->index) +
                  ": " + bad->description);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

SchemeReport RunExperiment(const Corpus& corpus, const ChunkRules& rules,
                           const ExperimentOptions& options) {
  CorpusStats stats = ComputeStats(corpus);
  SchemeBindings bindings = DefaultBindings(corpus.tagset);

  std::vector<SchemeKind> kinds;
  for (SchemeKind k : AllSchemeKinds()) {
    if (k == SchemeKind::kPlain ||
        std::find(options.schemes.begin(), options.schemes.end(), k) !=
            options.schemes.end()) {
      kinds.push_back(k);
    }
  }
  bool need_subject = std::any_of(kinds.begin(), kinds.end(), [](auto k) {
    return k == SchemeKind::kSubject || k == SchemeKind::kSubjectAndNounGroup;
  });

  auto annotations =
      ResolveAnnotations(corpus, rules, bindings, need_subject);
  std::size_t excluded = static_cast<std::size_t>(
      std::count(annotations.begin(), annotations.end(), std::nullopt));
  if (excluded == annotations.size()) {
    throw ChunkError("chunker found no subject in any sentence");
  }

  SchemeReport report;
  report.meta = {annotations.size() - excluded,
                 excluded,
                 stats.mean_length,
                 corpus.tagset.size(),
                 H0(corpus.tagset),
                 options.max_n,
                 options.per_sentence_windows};

  for (SchemeKind kind : kinds) {
    Scheme scheme{kind, bindings, rules.determiners};
    scheme.Validate(corpus.tagset);
    auto sequences = SchemeSequences(corpus, annotations, scheme);
    EntropyProfile profile;
    if (options.per_sentence_windows) {
      profile = SegmentedProfile(sequences, corpus.tagset.size(),
                                 options.max_n);
    } else {
      std::vector<SymbolId> stream;
      for (const auto& seq : sequences) {
        stream.insert(stream.end(), seq.begin(), seq.end());
      }
      profile = Profile(stream, corpus.tagset, options.max_n);
    }
    report.rows.push_back({std::string(Suffix(kind)), profile.hn, {}});
  }

  const std::vector<double> base = report.rows.front().h;
  for (ReportRow& row : report.rows) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      row.delta.push_back(row.h[k] - base[k]);
    }
  }
  report.Validate();
  return report;
}

std::optional<ReportFormat> ReportFormatFromName(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

void RenderReport(const SchemeReport& report, ReportFormat format,
                  std::ostream& out) {
  switch (format) {
    case ReportFormat::kText:
      RenderText(report, out);
      break;
    case ReportFormat::kTsv:
      RenderTsv(report, out);
      break;
    case ReportFormat::kJson:
      RenderJson(report, out);
      break;
  }
}

SchemeReport ParseReportTsv(std::istream& in) {
  SchemeReport report;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    if (line.rfind("# ", 0) == 0) {
      if (fields.size() != 2) throw InputError("bad metadata line", lineno);
      std::string_view key = fields[0].substr(2);
      ReportMetadata& m = report.meta;
      if (key == "sentences") {
        m.sentences = ParseCount(fields[1], lineno);
      } else if (key == "excluded") {
        m.excluded = ParseCount(fields[1], lineno);
      } else if (key == "mean_length") {
        m.mean_length = ParseDouble(fields[1], lineno);
      } else if (key == "tagset_size") {
        m.tagset_size = ParseCount(fields[1], lineno);
      } else if (key == "h0") {
        m.h0 = ParseDouble(fields[1], lineno);
      } else if (key == "max_n") {
        m.max_n = ParseCount(fields[1], lineno);
      } else if (key == "per_sentence_windows") {
        m.per_sentence_windows = ParseCount(fields[1], lineno) != 0;
      } else {
        throw InputError("unknown metadata key '" + std::string(key) + "'",
                         lineno);
      }
      continue;
    }
    if (!header_seen) {
      if (fields.front() != "scheme") {
        throw InputError("expected column header", lineno);
      }
      header_seen = true;
      continue;
    }
    const std::size_t n = report.meta.max_n;
    if (fields.size() != 1 + 2 * n) {
      throw InputError("expected " + std::to_string(1 + 2 * n) + " columns",
                       lineno);
    }
    ReportRow row;
    row.label = std::string(fields[0]);
    for (std::size_t k = 0; k < n; ++k) {
      row.h.push_back(ParseDouble(fields[1 + k], lineno));
      row.delta.push_back(ParseDouble(fields[1 + n + k], lineno));
    }
    report.rows.push_back(std::move(row));
  }
  report.Validate();
  return report;
}

SchemeReport ParseReportJson(std::istream& in) {
  SchemeReport report;
  try {
    json doc = json::parse(in);
    const json& m = doc.at("metadata");
    report.meta.sentences = m.at("sentences").get<std::size_t>();
    report.meta.excluded = m.at("excluded").get<std::size_t>();
    report.meta.mean_length = m.at("mean_length").get<double>();
    report.meta.tagset_size = m.at("tagset_size").get<std::size_t>();
    report.meta.h0 = m.at("h0").get<double>();
    report.meta.max_n = m.at("max_n").get<std::size_t>();
    report.meta.per_sentence_windows =
        m.at("per_sentence_windows").get<bool>();
    for (const json& r : doc.at("rows")) {
      report.rows.push_back({r.at("scheme").get<std::string>(),
                             r.at("h").get<std::vector<double>>(),
                             r.at("delta").get<std::vector<double>>()});
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad report json: ") + e.what());
  }
  report.Validate();
  return report;
}

}  // namespace hypertag
