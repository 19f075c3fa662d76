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

// Brute-force reference for ConditionalEntropy. Shares no counting code with
// NgramTable: windows are materialised, sorted and run-length counted.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hypertag/entropy.h"
#include "hypertag/error.h"

namespace hypertag {
namespace {

double EntropyOfSorted(std::vector<Ngram>& grams) {
  std::sort(grams.begin(), grams.end());
  const double total = static_cast<double>(grams.size());
  double h = 0.0;
  for (std::size_t i = 0; i < grams.size();) {
    std::size_t j = i;
    while (j < grams.size() && grams[j] == grams[i]) ++j;
    double p = static_cast<double>(j - i) / total;
    h -= p * std::log2(p);
    i = j;
  }
  return h;
}

}  // namespace

double ConditionalEntropyOracle(std::span<const SymbolId> stream,
                                std::size_t n) {
  if (n == 0) throw DataError("n-gram order must be at least 1");
  if (stream.size() < n) {
    throw DataError("insufficient data for n-gram order " + std::to_string(n));
  }
  std::vector<Ngram> windows, prefixes;
  for (std::size_t i = 0; i + n <= stream.size(); ++i) {
    windows.emplace_back(stream.begin() + i, stream.begin() + i + n);
    prefixes.emplace_back(stream.begin() + i, stream.begin() + i + n - 1);
  }
  double joint = EntropyOfSorted(windows);
  double context = EntropyOfSorted(prefixes);
  return joint - context;
}

}  // namespace hypertag
