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

#include "parapref/text.hpp"

#include <algorithm>

#include "parapref/errors.hpp"

namespace parapref {

namespace {

bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(unsigned char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

char lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

void emit_chunk(std::string_view chunk, bool lowercase,
                std::vector<std::string>& out) {
  size_t begin = 0;
  size_t end = chunk.size();

  // Leading punctuation, one token per character.
  while (begin < end && is_ascii_punct(static_cast<unsigned char>(chunk[begin]))) {
    out.emplace_back(1, chunk[begin]);
    ++begin;
  }
  // Trailing punctuation is collected now but appended after the core word.
  size_t tail_begin = end;
  while (tail_begin > begin &&
         is_ascii_punct(static_cast<unsigned char>(chunk[tail_begin - 1]))) {
    --tail_begin;
  }
  if (tail_begin > begin) {
    std::string word(chunk.substr(begin, tail_begin - begin));
    if (lowercase) {
      std::transform(word.begin(), word.end(), word.begin(), lower_ascii);
    }
    out.push_back(std::move(word));
  }
  for (size_t i = tail_begin; i < end; ++i) {
    out.emplace_back(1, chunk[i]);
  }
}

}  // namespace

std::vector<std::string> tokenize_words(std::string_view text,
                                        const TokenizerOptions& opts) {
  std::vector<std::string> out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    while (i < n && is_ascii_space(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < n && !is_ascii_space(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) emit_chunk(text.substr(i, j - i), opts.lowercase, out);
    i = j;
  }
  return out;
}

TokenId Vocab::add(std::string_view word) {
  auto it = ids_.find(std::string(word));
  if (it != ids_.end()) return it->second;
  const TokenId id = static_cast<TokenId>(words_.size());
  words_.emplace_back(word);
  ids_.emplace(words_.back(), id);
  return id;
}

std::optional<TokenId> Vocab::token_of(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocab::word_of(TokenId id) const {
  if (id < 0 || static_cast<size_t>(id) >= words_.size()) {
    throw DataError("token id " + std::to_string(id) +
                    " out of range for vocab '" + vocab_id_ + "' (size " +
                    std::to_string(words_.size()) + ")");
  }
  return words_[static_cast<size_t>(id)];
}

TokenId Vocab::ensure_unk() {
  if (!unk_id_) unk_id_ = add("<unk>");
  return *unk_id_;
}

TokenSeq Vocab::encode_words(std::span<const std::string> words,
                             bool allow_unknown) const {
  TokenSeq seq;
  seq.vocab_id = vocab_id_;
  seq.tokens.reserve(words.size());
  for (const auto& w : words) {
    auto id = token_of(w);
    if (!id) {
      if (allow_unknown && unk_id_) {
        seq.tokens.push_back(*unk_id_);
        continue;
      }
      throw DataError("word '" + w + "' not in vocab '" + vocab_id_ + "'");
    }
    seq.tokens.push_back(*id);
  }
  return seq;
}

TokenSeq Vocab::encode_text(std::string_view text, const TokenizerOptions& opts,
                            bool allow_unknown) const {
  const auto words = tokenize_words(text, opts);
  return encode_words(words, allow_unknown);
}

std::vector<std::string> Vocab::decode(const TokenSeq& seq) const {
  std::vector<std::string> words;
  words.reserve(seq.tokens.size());
  for (TokenId id : seq.tokens) words.push_back(word_of(id));
  return words;
}

std::string Vocab::render(const TokenSeq& seq) const {
  std::string out;
  for (size_t i = 0; i < seq.tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += word_of(seq.tokens[i]);
  }
  return out;
}

Vocab build_vocab(std::string vocab_id, std::span<const std::string> docs,
                  const TokenizerOptions& opts,
                  std::span<const std::string> extra_words) {
  Vocab vocab(std::move(vocab_id));
  for (const auto& doc : docs) {
    for (const auto& word : tokenize_words(doc, opts)) vocab.add(word);
  }
  for (const auto& word : extra_words) vocab.add(word);
  return vocab;
}

void check_tokens(const TokenSeq& seq, const std::string& vocab_id,
                  size_t vocab_size) {
  if (seq.vocab_id != vocab_id) {
    throw DataError("vocab mismatch: sequence has '" + seq.vocab_id +
                    "', expected '" + vocab_id + "'");
  }
  for (TokenId id : seq.tokens) {
    if (id < 0 || static_cast<size_t>(id) >= vocab_size) {
      throw DataError("token id " + std::to_string(id) +
                      " out of range for vocab '" + vocab_id + "' (size " +
                      std::to_string(vocab_size) + ")");
    }
  }
}

}  // namespace parapref
