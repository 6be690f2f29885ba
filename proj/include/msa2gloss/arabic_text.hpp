// Copyright 2026 The msa2gloss Authors
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

#ifndef MSA2GLOSS_ARABIC_TEXT_HPP
#define MSA2GLOSS_ARABIC_TEXT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msa2gloss/utf8.hpp"

namespace msa2gloss {

// Character classes ---------------------------------------------------------

// Harakat, tanween, shadda and sukun.
constexpr bool is_diacritic(char32_t c) { return c >= 0x064B && c <= 0x0652; }

constexpr bool is_tatweel(char32_t c) { return c == 0x0640; }

constexpr bool is_whitespace(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

// Fixed punctuation inventory: ؟ ? ، , . ! :
constexpr bool is_punctuation(char32_t c) {
  switch (c) {
    case 0x061F: case U'?': case 0x060C: case U',': case U'.': case U'!': case U':':
      return true;
    default:
      return false;
  }
}

// Sentence terminators: ؟ ? . !
constexpr bool is_terminator(char32_t c) {
  return c == 0x061F || c == U'?' || c == U'.' || c == U'!';
}

// Letters of the Arabic, Arabic Supplement and Arabic Extended-A blocks.
// Tatweel, digits, marks and punctuation are excluded.
constexpr bool is_arabic_letter(char32_t c) {
  return (c >= 0x0620 && c <= 0x063F) || (c >= 0x0641 && c <= 0x064A) ||
         (c >= 0x0671 && c <= 0x06D3) || c == 0x06D5 || c == 0x06EE ||
         c == 0x06EF || (c >= 0x06FA && c <= 0x06FC) || c == 0x06FF ||
         (c >= 0x0750 && c <= 0x077F) || (c >= 0x08A0 && c <= 0x08C9);
}

// Normalization -------------------------------------------------------------

// Strips diacritics and tatweel, collapses whitespace runs to one space and
// trims both ends. Hamza-bearing alef forms are kept as written.
inline std::u32string normalize(std::u32string_view raw) {
  std::u32string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char32_t c : raw) {
    if (is_diacritic(c) || is_tatweel(c)) continue;
    if (is_whitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

inline std::string normalize(std::string_view raw) {
  return utf8::encode(normalize(utf8::decode(raw)));
}

// Tokens --------------------------------------------------------------------

enum class TokenKind { Word, Punctuation };

// Offsets count Unicode scalar values in the normalized text; end is
// exclusive.
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::Word;

  bool is_word() const { return kind == TokenKind::Word; }
  bool is_punctuation() const { return kind == TokenKind::Punctuation; }

  friend bool operator==(const Token&, const Token&) = default;
};

// Words are maximal runs of Arabic letters. Each inventory punctuation mark
// is its own token. Any other non-space character becomes a one-character
// Word token.
inline std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t c = text[i];
    if (is_whitespace(c)) {
      ++i;
    } else if (is_arabic_letter(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_arabic_letter(text[j])) ++j;
      tokens.push_back({utf8::encode(text.substr(i, j - i)), i, j, TokenKind::Word});
      i = j;
    } else {
      const auto kind = is_punctuation(c) ? TokenKind::Punctuation : TokenKind::Word;
      tokens.push_back({utf8::encode(c), i, i + 1, kind});
      ++i;
    }
  }
  return tokens;
}

inline std::vector<Token> tokenize(std::string_view text) {
  return tokenize(utf8::decode(text));
}

// Sentences -----------------------------------------------------------------

// tokens always holds at least one Word token. When has_terminator is set,
// the last token is the terminating punctuation mark.
struct Sentence {
  std::vector<Token> tokens;
  bool has_terminator = false;

  std::optional<Token> terminator() const {
    if (!has_terminator) return std::nullopt;
    return tokens.back();
  }

  std::size_t word_count() const {
    std::size_t n = 0;
    for (const auto& t : tokens) n += t.is_word();
    return n;
  }
};

inline bool is_terminator_token(const Token& t) {
  if (!t.is_punctuation()) return false;
  const auto cps = utf8::decode(t.surface);
  return cps.size() == 1 && is_terminator(cps[0]);
}

// Splits after every terminator. Fragments with no Word token (for example a
// stray "." or "،") are dropped along with their punctuation.
inline std::vector<Sentence> split_sentences(std::span<const Token> tokens) {
  std::vector<Sentence> sentences;
  Sentence current;
  auto flush = [&](bool terminated) {
    current.has_terminator = terminated;
    if (current.word_count() > 0) sentences.push_back(std::move(current));
    current = Sentence{};
  };
  for (const auto& t : tokens) {
    current.tokens.push_back(t);
    if (is_terminator_token(t)) flush(true);
  }
  if (!current.tokens.empty()) flush(false);
  return sentences;
}

}  // namespace msa2gloss

#endif  // MSA2GLOSS_ARABIC_TEXT_HPP
