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

// Plug-in (maximum-likelihood) n-gram entropies of a symbol stream, in bits
// per symbol.
//
// For block length n, with b a context of n-1 symbols and j the symbol that
// follows it,
//
//   H_n = -sum_{b,j} p(b,j) log2 p(j | b)
//       = -sum_{b,j} p(b,j) log2 p(b,j) + sum_b p(b) log2 p(b)
//
// where p(b,j) is the relative frequency of the n-gram and p(b) is obtained
// by summing p(b,j) over j. H_1 is the unigram entropy and
// H_0 = log2(alphabet size).

#ifndef HYPERTAG_ENTROPY_H_
#define HYPERTAG_ENTROPY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hypertag/tagset.h"

namespace hypertag {

using Ngram = std::vector<SymbolId>;

class NgramTable {
 public:
  explicit NgramTable(std::size_t order);

  std::size_t order() const { return order_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<Ngram, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(const Ngram& gram) const;

  void Add(std::span<const SymbolId> gram, std::uint64_t count = 1);
  // Tables over disjoint windows combine by summing counts.
  void Merge(const NgramTable& other);

  // Sums over the final position: the (n-1)-gram context table. For n = 1
  // the result holds the empty context with the full total.
  NgramTable ContextMarginal() const;

 private:
  std::size_t order_;
  std::uint64_t total_ = 0;
  std::map<Ngram, std::uint64_t> counts_;
};

// Counts all stream.size() - n + 1 contiguous windows. Throws DataError when
// the stream is shorter than n; n must be at least 1.
NgramTable CountNgrams(std::span<const SymbolId> stream, std::size_t n);

double H0(std::size_t alphabet_size);
double H0(const Tagset& tagset);

// -sum p log2 p over a table's relative frequencies (0 log 0 = 0).
double JointEntropy(const NgramTable& table);

// H_n from an n-gram table, using the two-term form above. Throws DataError
// on an empty table.
double ConditionalEntropy(const NgramTable& table);

// Reference H_n computed independently of NgramTable: windows are collected
// and sorted directly from the stream, and the result is the difference of
// joint entropies J_n - J_{n-1}, where J_{n-1} is over the windows' (n-1)
// prefixes. Intended for cross-checking ConditionalEntropy.
double ConditionalEntropyOracle(std::span<const SymbolId> stream,
                                std::size_t n);

struct EntropyProfile {
  double h0 = 0.0;
  std::vector<double> hn;  // hn[k] is H_{k+1}

  std::size_t max_n() const { return hn.size(); }
  double H(std::size_t n) const { return n == 0 ? h0 : hn.at(n - 1); }
};

// H_0 and H_1..H_max_n. Every order is estimated over the same predicted
// positions (those with at least max_n - 1 symbols of history), so the
// orders are marginals of one joint distribution and H_n never increases
// with n. Throws DataError if the stream is shorter than max_n.
EntropyProfile Profile(std::span<const SymbolId> stream,
                       std::size_t alphabet_size, std::size_t max_n);
EntropyProfile Profile(std::span<const SymbolId> stream, const Tagset& tagset,
                       std::size_t max_n);

// As above, but windows never span two segments. Segments shorter than max_n
// contribute nothing; throws DataError if no segment is long enough.
EntropyProfile SegmentedProfile(std::span<const std::vector<SymbolId>> segments,
                                std::size_t alphabet_size, std::size_t max_n);

}  // namespace hypertag

#endif  // HYPERTAG_ENTROPY_H_
