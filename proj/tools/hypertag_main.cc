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

// hypertag: measure whether hypertag schemes lower the n-gram entropy of
// part-of-speech tag streams.
//
//   hypertag analyze --corpus demo_corpus.txt --tagset demo_tagset.txt
//       --rules demo_rules.txt --schemes p,a,d,n,s,sn --max-n 3
//   hypertag letters --text moby_dick.txt --space --max-n 3
//
// Exit status: 0 on success, 1 on bad input or configuration, 2 when the
// chunker could not analyse any sentence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hypertag/chunker.h"
#include "hypertag/corpus.h"
#include "hypertag/error.h"
#include "hypertag/letters.h"
#include "hypertag/report.h"
#include "hypertag/tagset.h"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitChunker = 2;

struct AnalyzeArgs {
  std::string corpus;
  std::string tagset;
  std::string rules;
  std::string schemes = "p,a,d,n,s,sn";
  std::size_t max_n = 3;
  std::string format = "text";
  bool per_sentence_windows = false;
  std::string out;
};

struct LettersArgs {
  std::string text;
  bool space = true;
  std::size_t max_n = 3;
};

void Analyze(const AnalyzeArgs& args) {
  using namespace hypertag;
  auto format = ReportFormatFromName(args.format);
  if (!format) throw ConfigError("unknown format '" + args.format + "'");
  Tagset tagset = Tagset::ReadFile(args.tagset);
  ChunkRules rules = ReadChunkRulesFile(args.rules, tagset);
  Corpus corpus = ReadCorpusFile(args.corpus, tagset);

  ExperimentOptions options;
  options.schemes = ParseSchemeList(args.schemes);
  options.max_n = args.max_n;
  options.per_sentence_windows = args.per_sentence_windows;
  SchemeReport report = RunExperiment(corpus, rules, options);

  if (args.out.empty()) {
    RenderReport(report, *format, std::cout);
  } else {
    std::ofstream out(args.out);
    if (!out) throw InputError("cannot write " + args.out);
    RenderReport(report, *format, out);
  }
}

void Letters(const LettersArgs& args) {
  using namespace hypertag;
  std::ifstream in(args.text, std::ios::binary);
  if (!in) throw InputError("cannot open text file " + args.text);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  LetterStream stream = NormalizeText(text, args.space);
  EntropyProfile profile = LetterProfile(stream, args.max_n);

  std::printf("alphabet: %zu symbols (%s)\n", stream.alphabet_size(),
              args.space ? "letters and space" : "letters only");
  std::printf("symbols: %zu (dropped %zu digits, %zu punctuation, %zu other)\n",
              stream.symbols.size(), stream.dropped_digits,
              stream.dropped_punctuation, stream.dropped_other);
  std::printf("H0\t%.3f\n", profile.h0);
  for (std::size_t n = 1; n <= profile.max_n(); ++n) {
    std::printf("H%zu\t%.3f\n", n, profile.H(n));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy indicators for hypertagged part-of-speech streams"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Compare hypertag schemes on a corpus");
  analyze_cmd->add_option("--corpus", analyze.corpus, "Pre-tagged corpus file")
      ->required();
  analyze_cmd->add_option("--tagset", analyze.tagset, "Tagset definition file")
      ->required();
  analyze_cmd->add_option("--rules", analyze.rules, "Chunker rules file")
      ->required();
  analyze_cmd->add_option("--schemes", analyze.schemes,
                          "Comma-separated scheme suffixes (p,a,d,n,s,sn)");
  analyze_cmd->add_option("--max-n", analyze.max_n, "Highest n-gram order")
      ->check(CLI::Range(1, 16));
  analyze_cmd->add_option("--format", analyze.format, "text, tsv or json")
      ->check(CLI::IsMember({"text", "tsv", "json"}));
  analyze_cmd->add_flag("--per-sentence-windows", analyze.per_sentence_windows,
                        "Do not let n-grams cross sentence boundaries");
  analyze_cmd->add_option("--out", analyze.out, "Write the report here");

  LettersArgs letters;
  auto* letters_cmd =
      app.add_subcommand("letters", "Letter-sequence entropy of a text file");
  letters_cmd->add_option("--text", letters.text, "Text file")->required();
  letters_cmd->add_flag("--space,!--no-space", letters.space,
                        "Keep word spaces as a 27th symbol (default)");
  letters_cmd->add_option("--max-n", letters.max_n, "Highest n-gram order")
      ->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) Analyze(analyze);
    if (*letters_cmd) Letters(letters);
  } catch (const hypertag::ChunkError& e) {
    std::cerr << "hypertag: " << e.what() << '\n';
    return kExitChunker;
  } catch (const hypertag::Error& e) {
    std::cerr << "hypertag: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
