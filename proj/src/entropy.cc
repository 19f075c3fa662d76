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

#include "hypertag/entropy.h"

#include <cmath>
#include <string>

#include "hypertag/error.h"

namespace hypertag {
namespace {

double PlogP(std::uint64_t count, std::uint64_t total) {
  if (count == 0) return 0.0;
  double p = static_cast<double>(count) / static_cast<double>(total);
  return p * std::log2(p);
}

void CheckOrder(std::size_t n) {
  if (n == 0) throw DataError("n-gram order must be at least 1");
}

EntropyProfile ProfileOf(std::span<const std::span<const SymbolId>> segments,
                         std::size_t alphabet_size, std::size_t max_n) {
  CheckOrder(max_n);
  EntropyProfile profile;
  profile.h0 = H0(alphabet_size);
  for (std::size_t n = 1; n <= max_n; ++n) {
    NgramTable table(n);
    for (std::span<const SymbolId> segment : segments) {
      if (segment.size() < max_n) continue;
      // Windows ending at positions >= max_n - 1, shared by every order.
      table.Merge(CountNgrams(segment.subspan(max_n - n), n));
    }
    if (table.empty()) {
      throw DataError("insufficient data for n-gram order " +
                      std::to_string(max_n));
    }
    profile.hn.push_back(ConditionalEntropy(table));
  }
  return profile;
}

}  // namespace

NgramTable::NgramTable(std::size_t order) : order_(order) { CheckOrder(order); }

std::uint64_t NgramTable::count(const Ngram& gram) const {
  auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

void NgramTable::Add(std::span<const SymbolId> gram, std::uint64_t count) {
  if (gram.size() != order_) {
    throw DataError("n-gram of length " + std::to_string(gram.size()) +
                    " added to order-" + std::to_string(order_) + " table");
  }
  if (count == 0) return;
  counts_[Ngram(gram.begin(), gram.end())] += count;
  total_ += count;
}

void NgramTable::Merge(const NgramTable& other) {
  if (other.order_ != order_) {
    throw DataError("cannot merge n-gram tables of different order");
  }
  for (const auto& [gram, c] : other.counts_) counts_[gram] += c;
  total_ += other.total_;
}

NgramTable NgramTable::ContextMarginal() const {
  // Order-0 tables are not constructible, so the empty context of a unigram
  // table is represented directly here.
  NgramTable context(order_ > 1 ? order_ - 1 : 1);
  context.order_ = order_ - 1;
  for (const auto& [gram, c] : counts_) {
    context.counts_[Ngram(gram.begin(), gram.end() - 1)] += c;
  }
  context.total_ = total_;
  return context;
}

NgramTable CountNgrams(std::span<const SymbolId> stream, std::size_t n) {
  CheckOrder(n);
  if (stream.size() < n) {
    throw DataError("insufficient data for n-gram order " + std::to_string(n));
  }
  NgramTable table(n);
  for (std::size_t i = 0; i + n <= stream.size(); ++i) {
    table.Add(stream.subspan(i, n));
  }
  return table;
}

double H0(std::size_t alphabet_size) {
  if (alphabet_size == 0) throw DataError("empty alphabet");
  return std::log2(static_cast<double>(alphabet_size));
}

double H0(const Tagset& tagset) { return H0(tagset.size()); }

double JointEntropy(const NgramTable& table) {
  double h = 0.0;
  for (const auto& [gram, c] : table.counts()) h -= PlogP(c, table.total());
  return h;
}

double ConditionalEntropy(const NgramTable& table) {
  if (table.empty()) throw DataError("empty n-gram table");
  NgramTable context = table.ContextMarginal();
  double h = JointEntropy(table);
  for (const auto& [gram, c] : context.counts()) h += PlogP(c, context.total());
  return h;
}

EntropyProfile Profile(std::span<const SymbolId> stream,
                       std::size_t alphabet_size, std::size_t max_n) {
  return ProfileOf(std::span(&stream, 1), alphabet_size, max_n);
}

EntropyProfile Profile(std::span<const SymbolId> stream, const Tagset& tagset,
                       std::size_t max_n) {
  return Profile(stream, tagset.size(), max_n);
}

EntropyProfile SegmentedProfile(std::span<const std::vector<SymbolId>> segments,
                                std::size_t alphabet_size, std::size_t max_n) {
  std::vector<std::span<const SymbolId>> views(segments.begin(),
                                               segments.end());
  return ProfileOf(views, alphabet_size, max_n);
}

}  // namespace hypertag
