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

#include <random>
#include <sstream>

#include "doctest.h"
#include "hypertag/error.h"
#include "test_util.h"

namespace hypertag {
namespace {

Tagset SmallTagset() {
  std::vector<std::string> pos = {"DET", "NOUN", "PRON", "VERB", "PREP"};
  std::vector<std::string> punct = {"STOP"};
  std::vector<std::string> classes = {"clause", "subject"};
  return Tagset::Build(pos, punct, classes);
}

Corpus Parse(const std::string& text, const Tagset& tagset) {
  std::istringstream in(text);
  return ParseCorpus(in, tagset);
}

TEST_CASE("word/TAG tokens keep their words") {
  Tagset t = SmallTagset();
  Corpus c = Parse("the/DET shirt/NOUN is/VERB ./STOP\n", t);
  REQUIRE(c.sentences.size() == 1);
  const TaggedSentence& s = c.sentences[0];
  CHECK(s.tags == testing::Tags(t, "DET NOUN VERB STOP"));
  CHECK(s.words == std::vector<std::string>{"the", "shirt", "is", "."});
  CHECK(c.annotations[0].spans.empty());
}

TEST_CASE("bare tag lines have no words") {
  Tagset t = SmallTagset();
  Corpus c = Parse("DET NOUN PRON VERB VERB PREP DET NOUN STOP\n", t);
  REQUIRE(c.sentences.size() == 1);
  CHECK(c.sentences[0].size() == 9);
  CHECK_FALSE(c.sentences[0].has_words());
}

TEST_CASE("inline brackets become annotation spans") {
  Tagset t = SmallTagset();
  Corpus c = Parse("DET NOUN [clause PRON VERB ] VERB PREP DET NOUN STOP\n", t);
  const auto& s = c.sentences[0];
  CHECK(s.tags == testing::Tags(t, "DET NOUN PRON VERB VERB PREP DET NOUN STOP"));
  const Annotation& a = c.annotations[0];
  REQUIRE(a.spans.size() == 1);
  CHECK(a.spans[0] == Span{*t.FindClass("clause"), {2, 4}});
  CHECK(a.Covers(*t.FindClass("clause")));
  CHECK_FALSE(a.Covers(*t.FindClass("subject")));
}

TEST_CASE("a class bracketed anywhere is covered in every sentence") {
  Tagset t = SmallTagset();
  Corpus c = Parse(
      "# comment\n"
      "DET NOUN VERB STOP\n"
      "\n"
      "[subject PRON ] VERB STOP\n",
      t);
  REQUIRE(c.sentences.size() == 2);
  ClassId subject = *t.FindClass("subject");
  CHECK(c.annotations[0].Covers(subject));
  CHECK(c.annotations[0].spans.empty());
  CHECK(c.annotations[1].RangesOf(subject) == std::vector<TokenRange>{{0, 1}});
}

TEST_CASE("nested brackets of different classes") {
  Tagset t = SmallTagset();
  Corpus c = Parse("[subject DET NOUN [clause PRON VERB ] ] VERB STOP\n", t);
  const Annotation& a = c.annotations[0];
  CHECK(a.RangesOf(*t.FindClass("subject")) ==
        std::vector<TokenRange>{{0, 4}});
  CHECK(a.RangesOf(*t.FindClass("clause")) == std::vector<TokenRange>{{2, 4}});
}

TEST_CASE("input errors carry the line number") {
  Tagset t = SmallTagset();
  struct Case {
    std::string text;
    std::string message;
  };
  const Case cases[] = {
      {"DET NOUN STOP\nDET ADJ NOUN STOP\n",
       "line 2: unknown tag 'ADJ' in token 'ADJ'"},
      {"the/DET big/ADJ\n", "line 1: unknown tag 'ADJ' in token 'big/ADJ'"},
      {"DET ] NOUN\n", "line 1: unmatched ']'"},
      {"[clause DET NOUN\n", "line 1: unclosed bracket [clause"},
      {"DET [clause ] NOUN\n", "line 1: empty bracket [clause"},
      {"[ DET ]\n", "line 1: malformed bracket '['"},
      {"[phrase DET ]\n", "line 1: unknown class 'phrase'"},
      {"DET <clause> NOUN </clause>\n",
       "line 1: hypertag '<clause>' not allowed in input"},
      {"the/DET NOUN\n", "line 1: mixed word/TAG and bare TAG tokens"},
      {"DET/ NOUN\n", "line 1: malformed token 'DET/'"},
      {"[clause [clause DET ] NOUN ]\n",
       "line 1: overlapping spans of one class at [0,1) and [0,2)"},
      {"[clause ]\n", "line 1: empty bracket [clause"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.text);
    try {
      Parse(c.text, t);
      FAIL("expected an InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()) == c.message);
    }
  }
}

TEST_CASE("words may contain slashes") {
  Tagset t = SmallTagset();
  Corpus c = Parse("and/or/PREP NOUN/NOUN\n", t);
  CHECK(c.sentences[0].words == std::vector<std::string>{"and/or", "NOUN"});
}

TEST_CASE("CheckAnnotation rejects crossing spans of different classes") {
  Annotation a;
  a.spans = {{0, {0, 3}}, {1, {2, 5}}};
  auto problem = CheckAnnotation(a, 6);
  REQUIRE(problem.has_value());
  CHECK(*problem == "crossing spans [0,3) and [2,5)");
  a.spans = {{0, {0, 7}}};
  CHECK(CheckAnnotation(a, 6).has_value());
  a.spans = {{0, {0, 3}}, {1, {0, 3}}, {1, {3, 4}}};
  CHECK_FALSE(CheckAnnotation(a, 6).has_value());
}

TEST_CASE("stats: mean length counts every token") {
  Tagset t = SmallTagset();
  CorpusStats s = ComputeStats(Parse("DET NOUN STOP\nDET NOUN VERB PREP STOP\n", t));
  CHECK(s.sentences == 2);
  CHECK(s.mean_length == 4.0);
  CHECK(s.tagset_size == t.size());

  CorpusStats one = ComputeStats(Parse("STOP\n", t));
  CHECK(one.sentences == 1);
  CHECK(one.mean_length == 1.0);

  CHECK_THROWS_AS(ComputeStats(Parse("# nothing here\n", t)), DataError);
}

TEST_CASE("stats of the bundled demo corpus") {
  Tagset t = testing::DemoTagset();
  Corpus c = testing::DemoCorpus(t);
  CorpusStats s = ComputeStats(c);
  CHECK(s.sentences == 102);
  CHECK(s.mean_length == doctest::Approx(1465.0 / 102.0).epsilon(1e-15));
  CHECK(s.tagset_size == 32);
}

TEST_CASE("demo corpus annotations never cross") {
  Tagset t = testing::DemoTagset();
  Corpus c = testing::DemoCorpus(t);
  ClassId subject = *t.FindClass("subject");
  ClassId ng = *t.FindClass("noun_group");
  for (std::size_t i = 0; i < c.sentences.size(); ++i) {
    CAPTURE(i);
    CHECK_FALSE(CheckAnnotation(c.annotations[i], c.sentences[i].size()));
    CHECK(c.annotations[i].RangesOf(subject).size() == 1);
    CHECK(c.annotations[i].Covers(ng));
  }
}

void CheckRoundTrip(const Corpus& original) {
  std::ostringstream out;
  WriteCorpus(original, out);
  std::istringstream in(out.str());
  Corpus again = ParseCorpus(in, original.tagset);
  REQUIRE(again.sentences.size() == original.sentences.size());
  for (std::size_t i = 0; i < original.sentences.size(); ++i) {
    CAPTURE(i);
    CHECK(again.sentences[i] == original.sentences[i]);
    CHECK(again.annotations[i] == original.annotations[i]);
  }
}

TEST_CASE("round trip: demo corpus") {
  Tagset t = testing::DemoTagset();
  CheckRoundTrip(testing::DemoCorpus(t));
}

TEST_CASE("property: parse, write, parse is the identity") {
  Tagset t = SmallTagset();
  const auto ordinary = t.SymbolsOfKind(SymbolKind::kPosTag);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 15), pick(0, ordinary.size() - 1);
    std::ostringstream text;
    std::uniform_int_distribution<int> lines(1, 5);
    std::bernoulli_distribution words(0.5);
    int n = lines(rng);
    // Build a corpus in memory, then render it; the parser must agree.
    Corpus c{t, {}, {}};
    for (int l = 0; l < n; ++l) {
      TaggedSentence s;
      std::size_t length = len(rng);
      bool with_words = words(rng);
      for (std::size_t i = 0; i < length; ++i) {
        s.tags.push_back(ordinary[pick(rng)]);
        if (with_words) s.words.push_back("w" + std::to_string(i));
      }
      Annotation a;
      testing::RandomSpans(rng, 0, length, t.num_classes(), 0, a.spans);
      a.Sort();
      c.sentences.push_back(std::move(s));
      c.annotations.push_back(std::move(a));
    }
    // Coverage is inferred from the brackets present in the file.
    std::vector<ClassId> seen;
    for (const auto& a : c.annotations) {
      for (const Span& sp : a.spans) seen.push_back(sp.cls);
    }
    for (auto& a : c.annotations) {
      for (ClassId cls : seen) a.Cover(cls);
    }
    CheckRoundTrip(c);
  }
}

}  // namespace
}  // namespace hypertag
