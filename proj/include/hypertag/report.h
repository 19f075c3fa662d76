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

// Experiment runner: applies hypertagging schemes across a corpus, measures
// each resulting stream, and reports H_1..H_n per scheme with differences
// from the plain baseline.

#ifndef HYPERTAG_REPORT_H_
#define HYPERTAG_REPORT_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hypertag/chunker.h"
#include "hypertag/corpus.h"
#include "hypertag/schemes.h"

namespace hypertag {

struct ReportRow {
  std::string label;          // scheme suffix: p, a, d, n, s, sn
  std::vector<double> h;      // h[k] is H_{k+1}
  std::vector<double> delta;  // h[k] minus the plain row's h[k]

  bool operator==(const ReportRow&) const = default;
};

struct ReportMetadata {
  std::size_t sentences = 0;  // sentences measured
  std::size_t excluded = 0;   // dropped because the chunker failed
  double mean_length = 0.0;   // over the whole corpus, in raw tokens
  std::size_t tagset_size = 0;
  double h0 = 0.0;
  std::size_t max_n = 0;
  bool per_sentence_windows = false;

  bool operator==(const ReportMetadata&) const = default;
};

struct SchemeReport {
  ReportMetadata meta;
  std::vector<ReportRow> rows;

  const ReportRow& baseline() const;
  const ReportRow* Find(std::string_view label) const;
  // Exactly one plain row, zero plain deltas, consistent widths, finite
  // values. Throws Error otherwise.
  void Validate() const;

  bool operator==(const SchemeReport&) const = default;
};

struct ExperimentOptions {
  std::vector<SchemeKind> schemes;  // plain is always added
  std::size_t max_n = 3;
  bool per_sentence_windows = false;
};

// The annotation each sentence is measured with: classes the corpus file
// annotates are taken as gold, the others come from the chunker. An entry is
// nullopt when the chunker was needed for the subject and failed.
std::vector<std::optional<Annotation>> ResolveAnnotations(
    const Corpus& corpus, const ChunkRules& rules,
    const SchemeBindings& bindings, bool need_subject);

// Hypertagged sequences for every sentence with an annotation, in corpus
// order. Throws Error if a produced sequence fails bracket validation.
std::vector<std::vector<SymbolId>> SchemeSequences(
    const Corpus& corpus,
    const std::vector<std::optional<Annotation>>& annotations,
    const Scheme& scheme);

// Throws ChunkError if every sentence is excluded.
SchemeReport RunExperiment(const Corpus& corpus, const ChunkRules& rules,
                           const ExperimentOptions& options);

enum class ReportFormat { kText, kTsv, kJson };

std::optional<ReportFormat> ReportFormatFromName(std::string_view name);

// Text mirrors a rows-by-H_n table at 3 decimals plus a difference section;
// tsv and json carry full round-trip precision.
void RenderReport(const SchemeReport& report, ReportFormat format,
                  std::ostream& out);

SchemeReport ParseReportTsv(std::istream& in);
SchemeReport ParseReportJson(std::istream& in);

}  // namespace hypertag

#endif  // HYPERTAG_REPORT_H_
