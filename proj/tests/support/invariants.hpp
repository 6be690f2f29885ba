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

// Property checks shared by the property tests and the acceptance runner.
// Each returns an empty string on success or a description of the first
// violation.

#ifndef MSA2GLOSS_TESTS_INVARIANTS_HPP
#define MSA2GLOSS_TESTS_INVARIANTS_HPP

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "msa2gloss/msa2gloss.hpp"

namespace inv {

using msa2gloss::Format;
using msa2gloss::GlossSentence;
using msa2gloss::Lexicon;
using msa2gloss::RuleSet;
using msa2gloss::SentenceResult;
using msa2gloss::Translator;

inline std::string check_idempotent(const std::string& raw) {
  const auto once = msa2gloss::normalize(std::string_view(raw));
  const auto twice = msa2gloss::normalize(std::string_view(once));
  return once == twice ? "" : "normalize not idempotent on \"" + raw + "\"";
}

inline std::string check_token_coverage(const std::string& raw) {
  const auto text = msa2gloss::normalize(msa2gloss::utf8::decode(raw));
  const auto tokens = msa2gloss::tokenize(std::u32string_view(text));
  std::vector<int> cover(text.size(), 0);
  std::size_t prev_end = 0;
  for (const auto& t : tokens) {
    if (t.start >= t.end || t.end > text.size()) return "bad offsets for \"" + t.surface + "\"";
    if (t.start < prev_end) return "overlapping or unordered tokens";
    prev_end = t.end;
    if (msa2gloss::utf8::encode(std::u32string_view(text).substr(t.start, t.end - t.start)) != t.surface)
      return "surface does not match slice for \"" + t.surface + "\"";
    if (t.is_punctuation() && (t.end - t.start != 1 || !msa2gloss::is_punctuation(text[t.start])))
      return "punctuation token is not one inventory character";
    for (auto i = t.start; i < t.end; ++i) ++cover[i];
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool word_char = !msa2gloss::is_whitespace(text[i]) && !msa2gloss::is_punctuation(text[i]);
    if (word_char && cover[i] != 1) return "word character at " + std::to_string(i) + " covered " +
                                            std::to_string(cover[i]) + " times";
    if (msa2gloss::is_whitespace(text[i]) && cover[i] != 0) return "whitespace covered by a token";
  }
  // Sentence partition: retained sentences are consecutive, disjoint runs of
  // the token list, and every Word token lands in exactly one of them.
  const auto sentences = msa2gloss::split_sentences(tokens);
  std::size_t next = 0;
  std::size_t words_seen = 0;
  for (const auto& s : sentences) {
    if (s.word_count() == 0) return "sentence without words";
    for (const auto& t : s.tokens) {
      while (next < tokens.size() && !(tokens[next] == t)) {
        if (tokens[next].is_word()) return "word token missing from every sentence";
        ++next;
      }
      if (next == tokens.size()) return "sentence token not found in order";
      ++next;
      words_seen += t.is_word();
    }
    if (s.has_terminator && !msa2gloss::is_terminator_token(s.tokens.back()))
      return "terminator is not the last token";
  }
  std::size_t words_total = 0;
  for (const auto& t : tokens) words_total += t.is_word();
  if (words_seen != words_total) return "word tokens not partitioned";
  return "";
}

// Accounting, order preservation and evidence completeness for one result.
inline std::string check_gloss_accounting(const SentenceResult& r) {
  const auto& g = r.gloss;
  const auto n = r.sentence.tokens.size();
  if (g.glosses.size() + g.dropped.size() != n) return "glosses + dropped != token count";
  std::vector<int> seen(n, 0);
  for (const auto& t : g.glosses) {
    if (t.source >= n || !r.sentence.tokens[t.source].is_word()) return "gloss source is not a word";
    if (t.gloss.empty()) return "empty gloss";
    ++seen[t.source];
  }
  for (const auto& d : g.dropped) {
    if (d.source >= n) return "dropped index out of range";
    ++seen[d.source];
  }
  for (int s : seen)
    if (s != 1) return "token accounted " + std::to_string(s) + " times";
  for (std::size_t i = 1; i < g.glosses.size(); ++i)
    if (g.glosses[i].source <= g.glosses[i - 1].source) return "glosses reordered";

  const auto& f = r.features;
  auto has = [&](msa2gloss::Feature which) {
    for (const auto& e : f.evidence)
      if (e.feature == which && e.token_index < n) return true;
    return false;
  };
  if (f.tense != msa2gloss::Tense::Unspecified && !has(msa2gloss::Feature::Tense)) return "tense lacks evidence";
  if (f.mood.kind != msa2gloss::MoodKind::Declarative && !has(msa2gloss::Feature::Mood)) return "mood lacks evidence";
  if (f.polarity.negative() && !has(msa2gloss::Feature::Polarity)) return "polarity lacks evidence";
  if (!f.emphasis.empty() && !has(msa2gloss::Feature::Emphasis)) return "emphasis lacks evidence";
  return "";
}

// Tags recomputed from the features with a separate mapping.
inline std::string check_tags(const SentenceResult& r) {
  const auto& f = r.features;
  std::vector<std::string> want;
  if (f.tense == msa2gloss::Tense::Past) want.push_back("PAST");
  if (f.tense == msa2gloss::Tense::Present) want.push_back("PRESENT");
  if (f.tense == msa2gloss::Tense::Future) want.push_back("FUTURE");
  if (f.polarity.particle) want.push_back("NEG");
  if (f.mood.kind == msa2gloss::MoodKind::Interrogative) want.push_back("Q:" + f.mood.label);
  if (f.mood.kind == msa2gloss::MoodKind::Conditional) want.push_back("COND");
  if (!f.emphasis.empty()) want.push_back("EMPH");
  if (r.gloss.tags != want) return "tags do not follow features";
  int tense_tags = 0;
  for (const auto& t : r.gloss.tags) tense_tags += t == "PAST" || t == "PRESENT" || t == "FUTURE";
  if (tense_tags > 1) return "more than one tense tag";
  return "";
}

inline std::string check_json_round_trip(const GlossSentence& g) {
  const auto text = msa2gloss::render(g, Format::Json);
  try {
    if (msa2gloss::parse_gloss_json(text) != g) return "JSON round trip changed " + text;
  } catch (const std::exception& e) {
    return std::string("JSON did not parse: ") + e.what();
  }
  return "";
}

inline std::string check_deterministic(const std::string& input, const Lexicon& lex, const RuleSet& rules) {
  for (auto f : {Format::InlineText, Format::Json, Format::Tsv}) {
    std::istringstream a(input), b(input);
    std::ostringstream oa, ob;
    msa2gloss::run_pipeline(a, oa, lex, rules, f);
    msa2gloss::run_pipeline(b, ob, lex, rules, f);
    if (oa.str() != ob.str()) return "two runs differ";
  }
  return "";
}

struct SuiteResult {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Runs `body` on `cases` seeded inputs; stops collecting after 5 failures.
inline SuiteResult run_suite(std::size_t cases, std::uint64_t seed,
                             const std::function<std::string(gen::Rng&)>& body) {
  SuiteResult out;
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++out.cases;
    auto msg = body(rng);
    if (!msg.empty() && out.failures.size() < 5) out.failures.push_back(std::move(msg));
  }
  return out;
}

// Named invariant suites over random inputs.
inline std::vector<std::pair<std::string, SuiteResult>> all_suites(const Lexicon& lex, const RuleSet& rules,
                                                                   const gen::SentenceGenerator& sentences,
                                                                   std::size_t cases) {
  const Translator translator(lex, rules);
  auto per_sentence = [&](auto check) {
    return [&, check](gen::Rng& rng) -> std::string {
      for (const auto& r : translator.translate(sentences(rng)))
        if (auto m = check(r); !m.empty()) return m;
      return "";
    };
  };
  std::vector<std::pair<std::string, SuiteResult>> out;
  out.emplace_back("normalization idempotence",
                   run_suite(cases, 11, [](gen::Rng& rng) { return check_idempotent(gen::messy_text(rng)); }));
  out.emplace_back("token coverage",
                   run_suite(cases, 12, [](gen::Rng& rng) { return check_token_coverage(gen::messy_text(rng)); }));
  out.emplace_back("gloss accounting", run_suite(cases, 13, per_sentence(check_gloss_accounting)));
  out.emplace_back("tag/feature consistency", run_suite(cases, 14, per_sentence(check_tags)));
  out.emplace_back("JSON round trip",
                   run_suite(cases, 15, per_sentence([](const SentenceResult& r) {
                               return check_json_round_trip(r.gloss);
                             })));
  out.emplace_back("determinism", run_suite(cases, 16, [&](gen::Rng& rng) {
                     std::string input = sentences(rng) + "\n" + gen::messy_text(rng) + "\n" + sentences(rng);
                     return check_deterministic(input, lex, rules);
                   }));
  return out;
}

}  // namespace inv

#endif  // MSA2GLOSS_TESTS_INVARIANTS_HPP
