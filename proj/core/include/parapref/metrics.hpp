// Copyright 2026 The parapref Authors.
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

#ifndef PARAPREF_METRICS_HPP_
#define PARAPREF_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parapref/text.hpp"

namespace parapref {

// Words of a text after tokenize_words(); no empty strings.
struct WordSeq {
  std::vector<std::string> words;

  static WordSeq of_text(std::string_view text,
                         const TokenizerOptions& opts = {}) {
    return WordSeq{tokenize_words(text, opts)};
  }
  size_t size() const { return words.size(); }
};

// precision = LCS/|hypothesis|, recall = LCS/|reference|,
// f = sqrt(precision * recall). A zero-length side contributes factor 0,
// so f = 0 whenever either side is empty or nothing matches.
struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// Longest common subsequence length, single-row DP. Works on any
// equality-comparable element type; this is the one LCS used everywhere.
template <class T>
size_t lcs_length(std::span<const T> a, std::span<const T> b) {
  if (a.empty() || b.empty()) return 0;
  if (a.size() < b.size()) std::swap(a, b);  // DP row over the shorter side
  std::vector<size_t> row(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = 0;  // dp[i-1][j-1]
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      row[j] = (a[i - 1] == b[j - 1]) ? diag + 1
                                      : (up > row[j - 1] ? up : row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

RougeScore rouge_l(const WordSeq& hypothesis, const WordSeq& reference);

// Fraction of scores whose f strictly exceeds the threshold ("exceeds",
// so f == threshold does not count). Throws DataError on an empty list.
double extraction_ratio(std::span<const RougeScore> scores,
                        double threshold = 0.5);

// Truncates each output and reference to its first `prefix_words` words,
// scores ROUGE-L, and returns the fraction with f > 0.5.
double quotation_recall(std::span<const WordSeq> outputs,
                        std::span<const WordSeq> references,
                        size_t prefix_words = 50);

}  // namespace parapref

#endif  // PARAPREF_METRICS_HPP_
