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

#include "parapref/metrics.hpp"

#include <cmath>

#include "parapref/errors.hpp"

namespace parapref {

RougeScore rouge_l(const WordSeq& hypothesis, const WordSeq& reference) {
  RougeScore score;
  if (hypothesis.words.empty() || reference.words.empty()) return score;
  const size_t lcs = lcs_length(std::span<const std::string>(hypothesis.words),
                                std::span<const std::string>(reference.words));
  score.precision = static_cast<double>(lcs) / hypothesis.words.size();
  score.recall = static_cast<double>(lcs) / reference.words.size();
  score.f = std::sqrt(score.precision * score.recall);
  return score;
}

double extraction_ratio(std::span<const RougeScore> scores, double threshold) {
  if (scores.empty()) {
    throw DataError("extraction_ratio: empty score list");
  }
  size_t hits = 0;
  for (const auto& s : scores) {
    if (s.f > threshold) ++hits;
  }
  return static_cast<double>(hits) / scores.size();
}

double quotation_recall(std::span<const WordSeq> outputs,
                        std::span<const WordSeq> references,
                        size_t prefix_words) {
  if (outputs.size() != references.size()) {
    throw DataError("quotation_recall: " + std::to_string(outputs.size()) +
                    " outputs vs " + std::to_string(references.size()) +
                    " references");
  }
  std::vector<RougeScore> scores;
  scores.reserve(outputs.size());
  for (size_t i = 0; i < outputs.size(); ++i) {
    WordSeq h{{outputs[i].words.begin(),
               outputs[i].words.begin() +
                   std::min(prefix_words, outputs[i].words.size())}};
    WordSeq r{{references[i].words.begin(),
               references[i].words.begin() +
                   std::min(prefix_words, references[i].words.size())}};
    scores.push_back(rouge_l(h, r));
  }
  return extraction_ratio(scores, 0.5);
}

}  // namespace parapref
