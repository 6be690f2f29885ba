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

#ifndef MSA2GLOSS_MORPHOLOGY_HPP
#define MSA2GLOSS_MORPHOLOGY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "msa2gloss/arabic_text.hpp"
#include "msa2gloss/error.hpp"
#include "msa2gloss/utf8.hpp"

namespace msa2gloss {

// Declaration order is the disambiguation priority when one surface has
// several readings.
enum class Pos { Verb, Particle, Adverb, Noun, Adjective, Pronoun, Other };
enum class StemKind { PerfectiveStem, ImperfectiveStem, NotAVerbStem };
enum class VerbPrefix { None, FuturePrefix, PresentPrefix };

inline constexpr std::array<std::pair<Pos, std::string_view>, 7> kPosNames{{
    {Pos::Verb, "Verb"},
    {Pos::Noun, "Noun"},
    {Pos::Particle, "Particle"},
    {Pos::Adverb, "Adverb"},
    {Pos::Adjective, "Adjective"},
    {Pos::Pronoun, "Pronoun"},
    {Pos::Other, "Other"},
}};

inline constexpr std::array<std::pair<StemKind, std::string_view>, 3> kStemKindNames{{
    {StemKind::PerfectiveStem, "PerfectiveStem"},
    {StemKind::ImperfectiveStem, "ImperfectiveStem"},
    {StemKind::NotAVerbStem, "NotAVerbStem"},
}};

inline std::string_view to_string(Pos p) {
  for (const auto& [v, name] : kPosNames)
    if (v == p) return name;
  return "Other";
}

inline std::string_view to_string(StemKind k) {
  for (const auto& [v, name] : kStemKindNames)
    if (v == k) return name;
  return "NotAVerbStem";
}

inline std::string_view to_string(VerbPrefix p) {
  switch (p) {
    case VerbPrefix::FuturePrefix: return "FuturePrefix";
    case VerbPrefix::PresentPrefix: return "PresentPrefix";
    default: return "None";
  }
}

inline std::optional<Pos> parse_pos(std::string_view s) {
  for (const auto& [v, name] : kPosNames)
    if (name == s) return v;
  return std::nullopt;
}

inline std::optional<StemKind> parse_stem_kind(std::string_view s) {
  for (const auto& [v, name] : kStemKindNames)
    if (name == s) return v;
  return std::nullopt;
}

struct LexiconEntry {
  std::string surface;  // surface form or bare stem, normalized
  std::string lemma;
  Pos pos = Pos::Other;
  StemKind stem_kind = StemKind::NotAVerbStem;
  std::size_t line = 0;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    cols.push_back(line.substr(pos, tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return cols;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

inline bool is_skippable(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#';
}

inline std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, "cannot open file");
  return in;
}

}  // namespace detail

// Immutable multi-map from normalized surface to readings, in file order.
class Lexicon {
 public:
  Lexicon() = default;

  // Parses the 4-column TSV format:
  //   surface-or-stem <TAB> lemma <TAB> pos <TAB> stem-kind
  // Blank lines and lines starting with '#' are skipped.
  static Lexicon parse(std::istream& in, std::string source_path = {}) {
    Lexicon lex;
    lex.source_path_ = std::move(source_path);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      const auto line = detail::strip_cr(raw);
      if (detail::is_skippable(line)) continue;
      lex.add(parse_row(line, line_no, lex.source_path_));
    }
    if (in.bad()) throw LoadError(lex.source_path_, "read error");
    return lex;
  }

  static Lexicon load(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return parse(in, path);
  }

  static Lexicon from_entries(std::vector<LexiconEntry> entries) {
    Lexicon lex;
    for (auto& e : entries) lex.add(std::move(e));
    return lex;
  }

  std::span<const LexiconEntry> readings(std::string_view surface) const {
    const auto it = index_.find(std::string(surface));
    if (it == index_.end()) return {};
    return it->second;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::string& source_path() const { return source_path_; }

 private:
  static LexiconEntry parse_row(std::string_view line, std::size_t line_no,
                                const std::string& path) {
    const auto cols = detail::split_tabs(line);
    if (cols.size() != 4)
      throw ParseError(path, line_no,
                       "expected 4 tab-separated columns, found " + std::to_string(cols.size()));
    static constexpr std::array<std::string_view, 4> kNames{"surface", "lemma", "pos",
                                                            "stem-kind"};
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i].empty()) throw ParseError(path, line_no, "empty " + std::string(kNames[i]) + " field");

    LexiconEntry e;
    e.surface = normalize(cols[0]);
    e.lemma = normalize(cols[1]);
    if (e.surface.empty()) throw ParseError(path, line_no, "surface is empty after normalization");
    if (e.lemma.empty()) throw ParseError(path, line_no, "lemma is empty after normalization");
    const auto pos = parse_pos(cols[2]);
    if (!pos) throw ParseError(path, line_no, "unknown pos label '" + std::string(cols[2]) + "'");
    const auto kind = parse_stem_kind(cols[3]);
    if (!kind)
      throw ParseError(path, line_no, "unknown stem-kind label '" + std::string(cols[3]) + "'");
    e.pos = *pos;
    e.stem_kind = *kind;
    e.line = line_no;
    if ((e.pos == Pos::Verb) != (e.stem_kind != StemKind::NotAVerbStem))
      throw ParseError(path, line_no,
                       "Verb entries need a verb stem-kind and other entries need NotAVerbStem");
    return e;
  }

  void add(LexiconEntry e) {
    if (e.surface.empty()) throw UsageError("lexicon entry with empty surface");
    index_[e.surface].push_back(std::move(e));
    ++size_;
  }

  std::unordered_map<std::string, std::vector<LexiconEntry>> index_;
  std::size_t size_ = 0;
  std::string source_path_;
};

inline Lexicon load_lexicon(const std::string& path) { return Lexicon::load(path); }

// Verb prefix letters. Kept separate from the rest of the rule inventory so
// morphology does not depend on feature extraction.
struct PrefixRules {
  char32_t future = U'س';                                      // س
  std::vector<char32_t> present{U'ت', U'ن', U'ي', U'أ'};  // ت ن ي أ

  bool is_present(char32_t c) const {
    return std::find(present.begin(), present.end(), c) != present.end();
  }
};

struct Analysis {
  Token token;
  std::size_t index = 0;  // position of token within its sentence
  std::string lemma;
  Pos pos = Pos::Other;
  VerbPrefix prefix = VerbPrefix::None;
  std::optional<LexiconEntry> entry;

  bool is_verb() const { return pos == Pos::Verb; }
};

namespace detail {

inline const LexiconEntry* best_reading(std::span<const LexiconEntry> readings) {
  const LexiconEntry* best = nullptr;
  for (const auto& r : readings)
    if (best == nullptr || r.pos < best->pos) best = &r;
  return best;
}

inline const LexiconEntry* imperfective_reading(const Lexicon& lex, std::u32string_view stem) {
  if (stem.empty()) return nullptr;
  for (const auto& r : lex.readings(utf8::encode(stem)))
    if (r.stem_kind == StemKind::ImperfectiveStem) return &r;
  return nullptr;
}

// Imperfective entry confirming a present-prefixed form: either the whole
// surface or the surface minus its prefix letter.
inline const LexiconEntry* present_reading(const Lexicon& lex, std::u32string_view cps,
                                           const PrefixRules& prefixes) {
  if (cps.size() < 2 || !prefixes.is_present(cps[0])) return nullptr;
  if (const auto* whole = imperfective_reading(lex, cps)) return whole;
  return imperfective_reading(lex, cps.substr(1));
}

}  // namespace detail

// Resolution order, first match wins:
//   1. exact lexicon match (highest-priority reading);
//   2. future prefix + imperfective remainder;
//   3. present prefix + imperfective remainder;
//   4. unknown word: pos Other, lemma = surface.
inline Analysis analyze_token(const Token& token, const Lexicon& lexicon,
                              const PrefixRules& prefixes = {}) {
  if (!token.is_word())
    throw UsageError("analyze_token: punctuation token '" + token.surface + "'");

  Analysis a;
  a.token = token;
  const auto cps = utf8::decode(token.surface);

  if (const auto* e = detail::best_reading(lexicon.readings(token.surface))) {
    a.lemma = e->lemma;
    a.pos = e->pos;
    if (e->stem_kind == StemKind::ImperfectiveStem && !cps.empty() && prefixes.is_present(cps[0]))
      a.prefix = VerbPrefix::PresentPrefix;
    a.entry = *e;
    return a;
  }

  if (cps.size() >= 2 && cps[0] == prefixes.future) {
    const auto rest = std::u32string_view(cps).substr(1);
    const auto* e = detail::imperfective_reading(lexicon, rest);
    if (e == nullptr) e = detail::present_reading(lexicon, rest, prefixes);
    if (e != nullptr) {
      a.lemma = e->lemma;
      a.pos = Pos::Verb;
      a.prefix = VerbPrefix::FuturePrefix;
      a.entry = *e;
      return a;
    }
  }

  if (const auto* e = detail::present_reading(lexicon, cps, prefixes)) {
    a.lemma = e->lemma;
    a.pos = Pos::Verb;
    a.prefix = VerbPrefix::PresentPrefix;
    a.entry = *e;
    return a;
  }

  a.lemma = token.surface;
  a.pos = Pos::Other;
  return a;
}

// One Analysis per Word token of the sentence, in order. Each carries the
// token's index within sentence.tokens.
inline std::vector<Analysis> analyze_sentence(const Sentence& sentence, const Lexicon& lexicon,
                                              const PrefixRules& prefixes = {}) {
  std::vector<Analysis> out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (!sentence.tokens[i].is_word()) continue;
    out.push_back(analyze_token(sentence.tokens[i], lexicon, prefixes));
    out.back().index = i;
  }
  return out;
}

}  // namespace msa2gloss

#endif  // MSA2GLOSS_MORPHOLOGY_HPP
