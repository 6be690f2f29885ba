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

#ifndef MSA2GLOSS_GLOSS_HPP
#define MSA2GLOSS_GLOSS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "msa2gloss/arabic_text.hpp"
#include "msa2gloss/error.hpp"
#include "msa2gloss/features.hpp"
#include "msa2gloss/morphology.hpp"

namespace msa2gloss {

enum class GlossRole { Content, QuestionWord, EmphasisMarker };

inline std::string_view to_string(GlossRole r) {
  switch (r) {
    case GlossRole::QuestionWord: return "question_word";
    case GlossRole::EmphasisMarker: return "emphasis";
    default: return "content";
  }
}

inline std::optional<GlossRole> parse_gloss_role(std::string_view s) {
  for (auto r : {GlossRole::Content, GlossRole::QuestionWord, GlossRole::EmphasisMarker})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

struct GlossToken {
  std::string gloss;
  std::size_t source = 0;  // index into Sentence::tokens
  GlossRole role = GlossRole::Content;

  friend bool operator==(const GlossToken&, const GlossToken&) = default;
};

struct DroppedToken {
  std::size_t source = 0;
  std::string reason;

  friend bool operator==(const DroppedToken&, const DroppedToken&) = default;
};

namespace drop_reason {
inline constexpr std::string_view kAbsorbed = "absorbed-into-tag";
inline constexpr std::string_view kPunctuation = "punctuation";
inline constexpr std::string_view kPronoun = "pronoun";
}  // namespace drop_reason

struct GlossSentence {
  std::vector<GlossToken> glosses;
  std::vector<std::string> tags;
  std::vector<DroppedToken> dropped;

  friend bool operator==(const GlossSentence&, const GlossSentence&) = default;
};

// Tags in fixed order: tense, NEG, Q:<label> or COND, EMPH.
inline std::vector<std::string> tags_for(const SentenceFeatures& f) {
  std::vector<std::string> tags;
  switch (f.tense) {
    case Tense::Past: tags.emplace_back("PAST"); break;
    case Tense::Present: tags.emplace_back("PRESENT"); break;
    case Tense::Future: tags.emplace_back("FUTURE"); break;
    case Tense::Unspecified: break;
  }
  if (f.polarity.negative()) tags.emplace_back("NEG");
  if (f.mood.kind == MoodKind::Interrogative) tags.push_back("Q:" + f.mood.label);
  if (f.mood.kind == MoodKind::Conditional) tags.emplace_back("COND");
  if (!f.emphasis.empty()) tags.emplace_back("EMPH");
  return tags;
}

namespace detail {

// Rejects features that were not extracted from this sentence.
inline void check_features_match(const Sentence& sentence, const SentenceFeatures& features) {
  for (const auto& e : features.evidence)
    if (e.token_index >= sentence.tokens.size())
      throw UsageError("features reference token " + std::to_string(e.token_index) +
                       " outside the sentence");
  auto evidence_surfaces = [&](Feature which) {
    std::vector<std::string> out;
    for (const auto& e : features.evidence)
      if (e.feature == which) out.push_back(sentence.tokens[e.token_index].surface);
    return out;
  };
  if (features.polarity.negative()) {
    const auto s = evidence_surfaces(Feature::Polarity);
    if (s.size() != 1 || s.front() != *features.polarity.particle)
      throw UsageError("negation particle '" + *features.polarity.particle +
                       "' is not in the sentence");
  }
  if (evidence_surfaces(Feature::Emphasis) != features.emphasis)
    throw UsageError("emphasis words do not match the sentence");
  if (features.tense != Tense::Unspecified && evidence_surfaces(Feature::Tense).empty())
    throw UsageError("tense has no supporting token");
  if (features.mood.kind != MoodKind::Declarative && evidence_surfaces(Feature::Mood).empty())
    throw UsageError("mood has no supporting token");
}

}  // namespace detail

// Content words keep their lemma in source order. Negation, conditional and
// other function particles are folded into tags; question adverbs and
// emphasis words stay as glosses with their own roles.
inline GlossSentence generate_gloss(const Sentence& sentence, std::span<const Analysis> analyses,
                                    const SentenceFeatures& features, const RuleSet& rules) {
  detail::check_aligned(sentence, analyses);
  detail::check_features_match(sentence, features);

  GlossSentence g;
  g.tags = tags_for(features);
  std::size_t k = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const auto& tok = sentence.tokens[i];
    if (!tok.is_word()) {
      g.dropped.push_back({i, std::string(drop_reason::kPunctuation)});
      continue;
    }
    const Analysis& a = analyses[k++];
    const auto& w = tok.surface;
    if (rules.is_negation(w) || rules.is_conditional(w)) {
      g.dropped.push_back({i, std::string(drop_reason::kAbsorbed)});
    } else if (rules.is_question_adverb(w)) {
      g.glosses.push_back({a.lemma, i, GlossRole::QuestionWord});
    } else if (rules.is_emphasis(w)) {
      g.glosses.push_back({a.lemma, i, GlossRole::EmphasisMarker});
    } else if (a.pos == Pos::Particle) {
      g.dropped.push_back({i, std::string(drop_reason::kAbsorbed)});
    } else if (a.pos == Pos::Pronoun) {
      g.dropped.push_back({i, std::string(drop_reason::kPronoun)});
    } else {
      g.glosses.push_back({a.lemma, i, GlossRole::Content});
    }
  }
  return g;
}

// Rendering ----------------------------------------------------------------------

enum class Format { InlineText, Json, Tsv };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "inline") return Format::InlineText;
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  return std::nullopt;
}

inline nlohmann::ordered_json to_json(const GlossSentence& g) {
  auto glosses = nlohmann::ordered_json::array();
  for (const auto& t : g.glosses)
    glosses.push_back({{"gloss", t.gloss}, {"role", to_string(t.role)}, {"source", t.source}});
  auto dropped = nlohmann::ordered_json::array();
  for (const auto& d : g.dropped) dropped.push_back({{"source", d.source}, {"reason", d.reason}});
  nlohmann::ordered_json j;
  j["glosses"] = std::move(glosses);
  j["tags"] = g.tags;
  j["dropped"] = std::move(dropped);
  return j;
}

// Throws nlohmann::json exceptions or UsageError on a malformed document.
inline GlossSentence gloss_from_json(const nlohmann::json& j) {
  GlossSentence g;
  for (const auto& t : j.at("glosses")) {
    const auto role = parse_gloss_role(t.at("role").get<std::string>());
    if (!role) throw UsageError("unknown gloss role " + t.at("role").dump());
    g.glosses.push_back({t.at("gloss").get<std::string>(), t.at("source").get<std::size_t>(), *role});
  }
  g.tags = j.at("tags").get<std::vector<std::string>>();
  for (const auto& d : j.at("dropped"))
    g.dropped.push_back({d.at("source").get<std::size_t>(), d.at("reason").get<std::string>()});
  return g;
}

inline GlossSentence parse_gloss_json(std::string_view text) {
  return gloss_from_json(nlohmann::json::parse(text));
}

// One line, no trailing newline.
//   InlineText: [FUTURE][NEG] ذهب
//   Json:       {"glosses":[...],"tags":[...],"dropped":[...]}
//   Tsv:        ذهب<TAB>FUTURE,NEG
inline std::string render(const GlossSentence& g, Format format) {
  std::string out;
  switch (format) {
    case Format::InlineText: {
      for (const auto& t : g.tags) out += "[" + t + "]";
      for (const auto& t : g.glosses) {
        if (!out.empty()) out += ' ';
        out += t.gloss;
      }
      break;
    }
    case Format::Json:
      out = to_json(g).dump();
      break;
    case Format::Tsv: {
      for (std::size_t i = 0; i < g.glosses.size(); ++i) {
        if (i) out += ' ';
        out += g.glosses[i].gloss;
      }
      out += '\t';
      for (std::size_t i = 0; i < g.tags.size(); ++i) {
        if (i) out += ',';
        out += g.tags[i];
      }
      break;
    }
  }
  return out;
}

}  // namespace msa2gloss

#endif  // MSA2GLOSS_GLOSS_HPP
