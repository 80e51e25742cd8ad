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

#ifndef PARAPREF_TEXT_HPP_
#define PARAPREF_TEXT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace parapref {

using TokenId = int32_t;

// A tokenized text under a named vocabulary. Every id is < the vocabulary
// size; the empty sequence is valid.
struct TokenSeq {
  std::vector<TokenId> tokens;
  std::string vocab_id;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Deterministic word tokenizer.
//
// Rules, applied to UTF-8 byte strings:
//   - ASCII whitespace separates chunks.
//   - Leading and trailing ASCII punctuation of a chunk become one-character
//     tokens of their own; interior punctuation stays inside the word.
//   - ASCII letters are lowercased when `lowercase` is set (the default);
//     bytes >= 0x80 pass through untouched.
//
// Examples ("|" marks token boundaries):
//   "Copying: Yes"      -> copying | : | yes
//   "don't stop."       -> don't | stop | .
//   "(hello), WORLD!!"  -> ( | hello | ) | , | world | ! | !
struct TokenizerOptions {
  bool lowercase = true;
};

std::vector<std::string> tokenize_words(std::string_view text,
                                        const TokenizerOptions& opts = {});

// Word <-> id table. Ids are dense and assigned in insertion order, so a
// vocabulary built from the same word stream is always identical.
class Vocab {
 public:
  Vocab() = default;
  explicit Vocab(std::string vocab_id) : vocab_id_(std::move(vocab_id)) {}

  const std::string& id() const { return vocab_id_; }
  size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

  // Inserts the word if absent, returns its id.
  TokenId add(std::string_view word);

  std::optional<TokenId> token_of(std::string_view word) const;
  const std::string& word_of(TokenId id) const;  // throws DataError if out of range

  // Registers the reserved unknown-word token; idempotent.
  TokenId ensure_unk();
  std::optional<TokenId> unk_id() const { return unk_id_; }

  // Tokenizes pre-split words. Unknown words raise DataError unless the
  // vocabulary has an unk token and `allow_unknown` is set.
  TokenSeq encode_words(std::span<const std::string> words,
                        bool allow_unknown = false) const;
  TokenSeq encode_text(std::string_view text, const TokenizerOptions& opts = {},
                       bool allow_unknown = false) const;

  std::vector<std::string> decode(const TokenSeq& seq) const;
  // Space-joined words. decode/render and encode_text round-trip exactly
  // because every token is a whitespace-free word.
  std::string render(const TokenSeq& seq) const;

 private:
  std::string vocab_id_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, TokenId> ids_;
  std::optional<TokenId> unk_id_;
};

// Builds a vocabulary from documents in one pass plus any extra words
// (system-prompt words, fixture synonyms, ...).
Vocab build_vocab(std::string vocab_id, std::span<const std::string> docs,
                  const TokenizerOptions& opts = {},
                  std::span<const std::string> extra_words = {});

// Checks that seq belongs to `vocab_id` and all ids are < vocab_size.
void check_tokens(const TokenSeq& seq, const std::string& vocab_id,
                  size_t vocab_size);

}  // namespace parapref

#endif  // PARAPREF_TEXT_HPP_
