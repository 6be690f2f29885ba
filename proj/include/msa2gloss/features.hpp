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

#ifndef MSA2GLOSS_FEATURES_HPP
#define MSA2GLOSS_FEATURES_HPP

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msa2gloss/arabic_text.hpp"
#include "msa2gloss/error.hpp"
#include "msa2gloss/morphology.hpp"
#include "msa2gloss/utf8.hpp"

namespace msa2gloss {

enum class Tense { Past, Present, Future, Unspecified };
enum class MoodKind { Declarative, Interrogative, Conditional };

struct Mood {
  MoodKind kind = MoodKind::Declarative;
  std::string label;  // interrogative label, e.g. "WHEN"; empty otherwise

  static Mood declarative() { return {}; }
  static Mood interrogative(std::string label) { return {MoodKind::Interrogative, std::move(label)}; }
  static Mood conditional() { return {MoodKind::Conditional, {}}; }

  friend bool operator==(const Mood&, const Mood&) = default;
};

struct Polarity {
  std::optional<std::string> particle;  // set iff negative

  bool negative() const { return particle.has_value(); }
  static Polarity affirmative() { return {}; }
  static Polarity negated(std::string p) { return {std::move(p)}; }

  friend bool operator==(const Polarity&, const Polarity&) = default;
};

enum class Feature { Tense, Mood, Polarity, Emphasis };

struct Evidence {
  Feature feature;
  std::size_t token_index;  // index into Sentence::tokens
  std::string rule;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

template <typename T>
struct Detection {
  T value;
  std::vector<Evidence> evidence;
};

struct SentenceFeatures {
  Tense tense = Tense::Unspecified;
  Mood mood;
  Polarity polarity;
  std::vector<std::string> emphasis;
  std::vector<Evidence> evidence;

  bool same_values(const SentenceFeatures& o) const {
    return tense == o.tense && mood == o.mood && polarity == o.polarity && emphasis == o.emphasis;
  }
};

// String forms ---------------------------------------------------------------

inline std::string_view to_string(Tense t) {
  switch (t) {
    case Tense::Past: return "Past";
    case Tense::Present: return "Present";
    case Tense::Future: return "Future";
    default: return "Unspecified";
  }
}

inline std::optional<Tense> parse_tense(std::string_view s) {
  for (auto t : {Tense::Past, Tense::Present, Tense::Future, Tense::Unspecified})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

inline std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::Tense: return "tense";
    case Feature::Mood: return "mood";
    case Feature::Polarity: return "polarity";
    default: return "emphasis";
  }
}

// "Declarative", "Conditional" or "Interrogative(LABEL)".
inline std::string to_string(const Mood& m) {
  switch (m.kind) {
    case MoodKind::Interrogative: return "Interrogative(" + m.label + ")";
    case MoodKind::Conditional: return "Conditional";
    default: return "Declarative";
  }
}

inline std::optional<Mood> parse_mood(std::string_view s) {
  if (s == "Declarative") return Mood::declarative();
  if (s == "Conditional") return Mood::conditional();
  constexpr std::string_view kPrefix = "Interrogative(";
  if (s.size() > kPrefix.size() + 1 && s.substr(0, kPrefix.size()) == kPrefix && s.back() == ')')
    return Mood::interrogative(std::string(s.substr(kPrefix.size(), s.size() - kPrefix.size() - 1)));
  return std::nullopt;
}

// "Affirmative" or "Negative(PARTICLE)".
inline std::string to_string(const Polarity& p) {
  return p.negative() ? "Negative(" + *p.particle + ")" : "Affirmative";
}

inline std::optional<Polarity> parse_polarity(std::string_view s) {
  if (s == "Affirmative") return Polarity::affirmative();
  constexpr std::string_view kPrefix = "Negative(";
  if (s.size() > kPrefix.size() + 1 && s.substr(0, kPrefix.size()) == kPrefix && s.back() == ')')
    return Polarity::negated(normalize(s.substr(kPrefix.size(), s.size() - kPrefix.size() - 1)));
  return std::nullopt;
}

// Rule inventory ---------------------------------------------------------------

// Every trigger word the engine reacts to. Nothing outside this struct (and
// the PrefixRules it carries) names an Arabic word.
struct RuleSet {
  PrefixRules prefixes;
  std::map<std::string, Tense> negation;
  std::map<std::string, std::string> question_adverbs;
  std::set<std::string> question_marks;
  std::set<std::string> conditionals;
  std::set<std::string> emphasis;

  static RuleSet defaults() {
    RuleSet r;
    r.negation = {{"لا", Tense::Present},
                  {"ليس", Tense::Present},
                  {"لن", Tense::Future},
                  {"لم", Tense::Past}};
    r.question_adverbs = {{"هل", "YES-NO"}, {"من", "WHO"},   {"أين", "WHERE"},
                          {"متى", "WHEN"},  {"ماذا", "WHAT"}, {"كيف", "HOW"}};
    r.question_marks = {"؟", "?"};
    r.conditionals = {"إذا", "لو"};
    r.emphasis = {"جدا", "مرارا"};
    return r;
  }

  std::optional<Tense> negation_tense(std::string_view w) const {
    const auto it = negation.find(std::string(w));
    if (it == negation.end()) return std::nullopt;
    return it->second;
  }

  const std::string* question_label(std::string_view w) const {
    const auto it = question_adverbs.find(std::string(w));
    return it == question_adverbs.end() ? nullptr : &it->second;
  }

  bool is_negation(std::string_view w) const { return negation.count(std::string(w)) != 0; }
  bool is_question_adverb(std::string_view w) const { return question_label(w) != nullptr; }
  bool is_question_mark(std::string_view w) const { return question_marks.count(std::string(w)) != 0; }
  bool is_conditional(std::string_view w) const { return conditionals.count(std::string(w)) != 0; }
  bool is_emphasis(std::string_view w) const { return emphasis.count(std::string(w)) != 0; }

  // Name of the first category containing w, or nullptr.
  const char* category_of(std::string_view w) const {
    if (is_negation(w)) return "negation";
    if (is_question_adverb(w)) return "question-adverb";
    if (is_question_mark(w)) return "question-mark";
    if (is_conditional(w)) return "conditional";
    if (is_emphasis(w)) return "emphasis";
    return nullptr;
  }

  // A word listed in more than one category, if any.
  std::optional<std::string> find_conflict() const {
    std::map<std::string, int> seen;
    for (const auto& [w, t] : negation) ++seen[w];
    for (const auto& [w, l] : question_adverbs) ++seen[w];
    for (const auto& w : question_marks) ++seen[w];
    for (const auto& w : conditionals) ++seen[w];
    for (const auto& w : emphasis) ++seen[w];
    for (const auto& [w, n] : seen)
      if (n > 1) return w;
    return std::nullopt;
  }

  bool has_empty_category() const {
    return negation.empty() || question_adverbs.empty() || question_marks.empty() ||
           conditionals.empty() || emphasis.empty() || prefixes.present.empty();
  }

  void validate() const {
    if (has_empty_category()) throw UsageError("rule set has an empty category");
    if (const auto w = find_conflict())
      throw UsageError("rule word '" + *w + "' appears in more than one category");
  }
};

// Reads category <TAB> trigger [<TAB> value] lines. A category named in the
// file replaces that category of the defaults; unnamed categories keep their
// defaults.
//
//   negation         trigger  Past|Present|Future
//   question-adverb  trigger  LABEL
//   question-mark    char
//   conditional      trigger
//   emphasis         trigger
//   future-prefix    letter
//   present-prefix   letter
inline RuleSet parse_rules(std::istream& in, const std::string& path = {}) {
  RuleSet base = RuleSet::defaults();
  RuleSet over;
  over.prefixes.present.clear();
  std::set<std::string> replaced;
  std::map<std::string, std::size_t> trigger_line;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::strip_cr(raw);
    if (detail::is_skippable(line)) continue;
    const auto cols = detail::split_tabs(line);
    if (cols.size() < 2 || cols.size() > 3)
      throw ParseError(path, line_no, "expected category<TAB>trigger[<TAB>value]");
    const std::string category(cols[0]);
    const std::string trigger = normalize(cols[1]);
    const std::string value = cols.size() == 3 ? std::string(cols[2]) : std::string();
    if (trigger.empty()) throw ParseError(path, line_no, "empty trigger");

    auto require_value = [&] {
      if (value.empty()) throw ParseError(path, line_no, "category '" + category + "' needs a value");
    };
    auto single_char = [&]() -> char32_t {
      const auto cps = utf8::decode(trigger);
      if (cps.size() != 1)
        throw ParseError(path, line_no, "category '" + category + "' takes a single character");
      return cps[0];
    };

    if (category == "negation") {
      require_value();
      const auto t = parse_tense(value);
      if (!t || *t == Tense::Unspecified)
        throw ParseError(path, line_no, "negation tense must be Past, Present or Future, got '" + value + "'");
      over.negation[trigger] = *t;
    } else if (category == "question-adverb") {
      require_value();
      over.question_adverbs[trigger] = value;
    } else if (category == "question-mark") {
      const char32_t c = single_char();
      if (!is_terminator(c))
        throw ParseError(path, line_no, "question mark '" + trigger + "' is not a sentence terminator");
      over.question_marks.insert(trigger);
    } else if (category == "conditional") {
      over.conditionals.insert(trigger);
    } else if (category == "emphasis") {
      over.emphasis.insert(trigger);
    } else if (category == "future-prefix") {
      if (replaced.count(category)) throw ParseError(path, line_no, "future-prefix given twice");
      over.prefixes.future = single_char();
    } else if (category == "present-prefix") {
      over.prefixes.present.push_back(single_char());
    } else {
      throw ParseError(path, line_no, "unknown category '" + category + "'");
    }
    replaced.insert(category);
    trigger_line[trigger] = line_no;
  }
  if (in.bad()) throw LoadError(path, "read error");

  if (replaced.count("negation")) base.negation = std::move(over.negation);
  if (replaced.count("question-adverb")) base.question_adverbs = std::move(over.question_adverbs);
  if (replaced.count("question-mark")) base.question_marks = std::move(over.question_marks);
  if (replaced.count("conditional")) base.conditionals = std::move(over.conditionals);
  if (replaced.count("emphasis")) base.emphasis = std::move(over.emphasis);
  if (replaced.count("future-prefix")) base.prefixes.future = over.prefixes.future;
  if (replaced.count("present-prefix")) base.prefixes.present = std::move(over.prefixes.present);

  if (const auto w = base.find_conflict()) {
    const auto it = trigger_line.find(*w);
    throw ParseError(path, it == trigger_line.end() ? 0 : it->second,
                     "trigger '" + *w + "' appears in more than one category");
  }
  return base;
}

inline RuleSet load_rules(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return parse_rules(in, path);
}

// Detectors --------------------------------------------------------------------

// Precedence: negation particle > first prefixed verb (future or present) >
// any verb (default past) > Unspecified.
inline Detection<Tense> detect_tense(std::span<const Analysis> analyses, const RuleSet& rules) {
  for (const auto& a : analyses)
    if (const auto t = rules.negation_tense(a.token.surface))
      return {*t, {{Feature::Tense, a.index, "negation-particle"}}};
  for (const auto& a : analyses) {
    if (!a.is_verb()) continue;
    if (a.prefix == VerbPrefix::FuturePrefix)
      return {Tense::Future, {{Feature::Tense, a.index, "future-prefix"}}};
    if (a.prefix == VerbPrefix::PresentPrefix)
      return {Tense::Present, {{Feature::Tense, a.index, "present-prefix"}}};
  }
  for (const auto& a : analyses)
    if (a.is_verb()) return {Tense::Past, {{Feature::Tense, a.index, "default-past"}}};
  return {Tense::Unspecified, {}};
}

inline Detection<Polarity> detect_polarity(std::span<const Analysis> analyses, const RuleSet& rules) {
  for (const auto& a : analyses)
    if (rules.is_negation(a.token.surface))
      return {Polarity::negated(a.token.surface), {{Feature::Polarity, a.index, "negation-particle"}}};
  return {Polarity::affirmative(), {}};
}

// Interrogative (question mark or question adverb) > Conditional >
// Declarative. The label comes from the first question adverb, or YES-NO when
// only the mark is present.
inline Detection<Mood> detect_mood(const Sentence& sentence, std::span<const Analysis> analyses,
                                   const RuleSet& rules) {
  Detection<Mood> out{Mood::declarative(), {}};
  const Analysis* adverb = nullptr;
  for (const auto& a : analyses)
    if (rules.is_question_adverb(a.token.surface)) {
      adverb = &a;
      break;
    }
  const auto term = sentence.terminator();
  const bool marked = term && rules.is_question_mark(term->surface);
  if (adverb != nullptr || marked) {
    out.value = Mood::interrogative(adverb ? *rules.question_label(adverb->token.surface) : "YES-NO");
    if (adverb) out.evidence.push_back({Feature::Mood, adverb->index, "question-adverb"});
    if (marked) out.evidence.push_back({Feature::Mood, sentence.tokens.size() - 1, "question-mark"});
    return out;
  }
  for (const auto& a : analyses)
    if (rules.is_conditional(a.token.surface)) {
      out.value = Mood::conditional();
      out.evidence.push_back({Feature::Mood, a.index, "conditional-particle"});
      return out;
    }
  return out;
}

inline Detection<std::vector<std::string>> detect_emphasis(std::span<const Analysis> analyses,
                                                           const RuleSet& rules) {
  Detection<std::vector<std::string>> out;
  for (const auto& a : analyses)
    if (rules.is_emphasis(a.token.surface)) {
      out.value.push_back(a.token.surface);
      out.evidence.push_back({Feature::Emphasis, a.index, "emphasis-word"});
    }
  return out;
}

namespace detail {

inline void check_aligned(const Sentence& sentence, std::span<const Analysis> analyses) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (!sentence.tokens[i].is_word()) continue;
    if (k >= analyses.size() || analyses[k].index != i ||
        analyses[k].token.surface != sentence.tokens[i].surface)
      throw UsageError("analyses are not aligned with the sentence's word tokens");
    ++k;
  }
  if (k != analyses.size()) throw UsageError("more analyses than word tokens");
}

}  // namespace detail

inline SentenceFeatures extract_features(const Sentence& sentence, std::span<const Analysis> analyses,
                                         const RuleSet& rules) {
  detail::check_aligned(sentence, analyses);
  SentenceFeatures f;
  auto take = [&f](auto&& detection, auto& slot) {
    slot = std::move(detection.value);
    f.evidence.insert(f.evidence.end(), detection.evidence.begin(), detection.evidence.end());
  };
  take(detect_tense(analyses, rules), f.tense);
  take(detect_mood(sentence, analyses, rules), f.mood);
  take(detect_polarity(analyses, rules), f.polarity);
  take(detect_emphasis(analyses, rules), f.emphasis);
  return f;
}

}  // namespace msa2gloss

#endif  // MSA2GLOSS_FEATURES_HPP
