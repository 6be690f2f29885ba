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

// Brute-force trigger scanner used as an independent oracle for
// extract_features. It shares no code with the rule engine: it reads the
// lexicon file itself, splits on whitespace instead of scanning character
// classes, carries its own copy of the trigger tables, and recognizes
// prefixed verbs by generating every prefix + lexicon-stem concatenation
// rather than by stripping prefixes. Only the UTF-8 codec is borrowed.

#ifndef MSA2GLOSS_TESTS_TRIGGER_ORACLE_HPP
#define MSA2GLOSS_TESTS_TRIGGER_ORACLE_HPP

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "msa2gloss/utf8.hpp"

namespace oracle {

struct Verdict {
  std::string tense;
  std::string mood;
  std::string polarity;
  std::vector<std::string> emphasis;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Reading {
  std::string lemma;
  std::string pos;
  std::string kind;
};

class TriggerOracle {
 public:
  explicit TriggerOracle(const std::string& lexicon_path) {
    std::ifstream in(lexicon_path);
    if (!in) throw std::runtime_error("oracle: cannot open " + lexicon_path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::istringstream row(line);
      std::string surface, lemma, pos, kind;
      std::getline(row, surface, '\t');
      std::getline(row, lemma, '\t');
      std::getline(row, pos, '\t');
      std::getline(row, kind, '\t');
      lexicon_[strip_marks(surface)].push_back({lemma, pos, kind});
      if (kind == "ImperfectiveStem") imperfective_stems_.insert(strip_marks(surface));
    }
  }

  Verdict judge(const std::string& sentence) const {
    std::u32string text;
    for (char32_t c : msa2gloss::utf8::decode(sentence))
      if (!(c >= 0x064B && c <= 0x0652) && c != 0x0640) text.push_back(c);

    bool question_mark = false;
    // Trim trailing spaces, then look at the final character.
    while (!text.empty() && is_space(text.back())) text.pop_back();
    if (!text.empty() && (text.back() == U'؟' || text.back() == U'?')) question_mark = true;

    std::vector<std::string> words;
    std::string cur;
    for (char32_t c : text) {
      if (is_space(c) || is_punct(c)) {
        if (!cur.empty()) words.push_back(cur), cur.clear();
      } else {
        msa2gloss::utf8::append(cur, c);
      }
    }
    if (!cur.empty()) words.push_back(cur);

    Verdict v;
    v.polarity = "Affirmative";
    for (const auto& w : words)
      if (kNegation.count(w)) {
        v.polarity = "Negative(" + w + ")";
        break;
      }

    v.tense = "";
    for (const auto& w : words)
      if (kNegation.count(w)) {
        v.tense = kNegation.at(w);
        break;
      }
    if (v.tense.empty()) {
      bool any_verb = false;
      for (const auto& w : words) {
        const auto cls = classify(w);
        if (cls == "future" || cls == "present") {
          v.tense = cls == "future" ? "Future" : "Present";
          break;
        }
        any_verb |= cls == "verb";
      }
      if (v.tense.empty()) v.tense = any_verb ? "Past" : "Unspecified";
    }

    std::string label;
    for (const auto& w : words)
      if (kQuestion.count(w)) {
        label = kQuestion.at(w);
        break;
      }
    bool conditional = false;
    for (const auto& w : words) conditional |= kConditional.count(w) > 0;
    if (!label.empty() || question_mark)
      v.mood = "Interrogative(" + (label.empty() ? std::string("YES-NO") : label) + ")";
    else
      v.mood = conditional ? "Conditional" : "Declarative";

    for (const auto& w : words)
      if (kEmphasis.count(w)) v.emphasis.push_back(w);
    return v;
  }

 private:
  static bool is_space(char32_t c) { return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r'; }
  static bool is_punct(char32_t c) {
    return c == U'؟' || c == U'?' || c == U'،' || c == U',' || c == U'.' || c == U'!' || c == U':';
  }

  static std::string strip_marks(const std::string& s) {
    std::u32string out;
    for (char32_t c : msa2gloss::utf8::decode(s))
      if (!(c >= 0x064B && c <= 0x0652) && c != 0x0640) out.push_back(c);
    return msa2gloss::utf8::encode(out);
  }

  // "future", "present", "verb" (unprefixed) or "none".
  std::string classify(const std::string& w) const {
    if (const auto it = lexicon_.find(w); it != lexicon_.end()) {
      // The highest-priority reading is a verb iff any reading is a verb.
      for (const auto& r : it->second)
        if (r.pos == "Verb") {
          if (r.kind == "ImperfectiveStem" && starts_with_any(w, kPresentLetters)) return "present";
          return "verb";
        }
      return "none";
    }
    for (const auto& stem : imperfective_stems_) {
      if (w == kFutureLetter + stem) return "future";
      for (const auto& p : kPresentLetters)
        if (w == kFutureLetter + p + stem) return "future";
    }
    for (const auto& stem : imperfective_stems_)
      for (const auto& p : kPresentLetters)
        if (w == p + stem) return "present";
    return "none";
  }

  static bool starts_with_any(const std::string& w, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes)
      if (w.size() > p.size() && w.compare(0, p.size(), p) == 0) return true;
    return false;
  }

  inline static const std::map<std::string, std::string> kNegation{
      {"لا", "Present"}, {"ليس", "Present"}, {"لن", "Future"}, {"لم", "Past"}};
  inline static const std::map<std::string, std::string> kQuestion{
      {"هل", "YES-NO"}, {"من", "WHO"}, {"أين", "WHERE"},
      {"متى", "WHEN"},  {"ماذا", "WHAT"}, {"كيف", "HOW"}};
  inline static const std::set<std::string> kConditional{"إذا", "لو"};
  inline static const std::set<std::string> kEmphasis{"جدا", "مرارا"};
  inline static const std::string kFutureLetter = "س";
  inline static const std::vector<std::string> kPresentLetters{"ت", "ن", "ي", "أ"};

  std::map<std::string, std::vector<Reading>> lexicon_;
  std::set<std::string> imperfective_stems_;
};

}  // namespace oracle

#endif  // MSA2GLOSS_TESTS_TRIGGER_ORACLE_HPP
