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

#ifndef MSA2GLOSS_PIPELINE_HPP
#define MSA2GLOSS_PIPELINE_HPP

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "msa2gloss/arabic_text.hpp"
#include "msa2gloss/error.hpp"
#include "msa2gloss/features.hpp"
#include "msa2gloss/gloss.hpp"
#include "msa2gloss/morphology.hpp"

namespace msa2gloss {

// Everything computed for one sentence.
struct SentenceResult {
  Sentence sentence;
  std::vector<Analysis> analyses;
  SentenceFeatures features;
  GlossSentence gloss;
};

class Translator {
 public:
  Translator(const Lexicon& lexicon, const RuleSet& rules) : lexicon_(lexicon), rules_(rules) {}

  // normalize -> tokenize -> split -> analyze -> extract -> gloss.
  std::vector<SentenceResult> translate(std::string_view text) const {
    const auto tokens = tokenize(normalize(utf8::decode(text)));
    std::vector<SentenceResult> out;
    for (auto& s : split_sentences(tokens)) {
      SentenceResult r;
      r.sentence = std::move(s);
      r.analyses = analyze_sentence(r.sentence, lexicon_, rules_.prefixes);
      r.features = extract_features(r.sentence, r.analyses, rules_);
      r.gloss = generate_gloss(r.sentence, r.analyses, r.features, rules_);
      out.push_back(std::move(r));
    }
    return out;
  }

  const Lexicon& lexicon() const { return lexicon_; }
  const RuleSet& rules() const { return rules_; }

 private:
  const Lexicon& lexicon_;
  const RuleSet& rules_;
};

// Input is consumed line by line; sentences never span a newline. Writes one
// rendered record per sentence. Returns the number of sentences written.
inline std::size_t run_pipeline(std::istream& in, std::ostream& out, const Lexicon& lexicon,
                                const RuleSet& rules, Format format) {
  const Translator translator(lexicon, rules);
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    for (const auto& r : translator.translate(line)) {
      out << render(r.gloss, format) << '\n';
      ++count;
    }
  }
  if (in.bad()) throw LoadError("<input>", "read error");
  return count;
}

// Per-token debugging view used by the `analyze` subcommand.
inline nlohmann::ordered_json analysis_json(const SentenceResult& r) {
  auto tokens = nlohmann::ordered_json::array();
  std::size_t k = 0;
  for (std::size_t i = 0; i < r.sentence.tokens.size(); ++i) {
    const auto& t = r.sentence.tokens[i];
    nlohmann::ordered_json j{{"index", i},
                             {"surface", t.surface},
                             {"start", t.start},
                             {"end", t.end},
                             {"kind", t.is_word() ? "word" : "punctuation"}};
    if (t.is_word()) {
      const auto& a = r.analyses[k++];
      j["lemma"] = a.lemma;
      j["pos"] = to_string(a.pos);
      j["verb_prefix"] = to_string(a.prefix);
      j["lexicon_line"] = a.entry ? nlohmann::ordered_json(a.entry->line) : nlohmann::ordered_json();
    }
    tokens.push_back(std::move(j));
  }
  auto evidence = nlohmann::ordered_json::array();
  for (const auto& e : r.features.evidence)
    evidence.push_back({{"feature", to_string(e.feature)}, {"token", e.token_index}, {"rule", e.rule}});
  nlohmann::ordered_json features{{"tense", to_string(r.features.tense)},
                                  {"mood", to_string(r.features.mood)},
                                  {"polarity", to_string(r.features.polarity)},
                                  {"emphasis", r.features.emphasis},
                                  {"evidence", std::move(evidence)}};
  return {{"tokens", std::move(tokens)}, {"features", std::move(features)}};
}

// Gold corpus ----------------------------------------------------------------------

struct GoldRecord {
  std::string source;
  Tense tense = Tense::Unspecified;
  Mood mood;
  Polarity polarity;
  std::vector<std::string> emphasis;
  std::optional<std::vector<std::string>> glosses;
  std::size_t line = 0;
};

namespace detail {

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find(sep, pos);
    const auto piece = s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (!piece.empty()) out.emplace_back(piece);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

// TSV columns: source, tense, mood, polarity, emphasis (';'-joined, '-' or
// empty for none), optional glosses (space-joined lemmas).
inline std::vector<GoldRecord> parse_gold(std::istream& in, const std::string& path = {}) {
  std::vector<GoldRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::strip_cr(raw);
    if (detail::is_skippable(line)) continue;
    const auto cols = detail::split_tabs(line);
    if (cols.size() < 5 || cols.size() > 6)
      throw ParseError(path, line_no, "expected 5 or 6 tab-separated columns, found " +
                                          std::to_string(cols.size()));
    GoldRecord r;
    r.line = line_no;
    r.source = std::string(cols[0]);
    if (normalize(r.source).empty()) throw ParseError(path, line_no, "empty source sentence");
    const auto tense = parse_tense(cols[1]);
    if (!tense) throw ParseError(path, line_no, "unknown tense '" + std::string(cols[1]) + "'");
    const auto mood = parse_mood(cols[2]);
    if (!mood) throw ParseError(path, line_no, "unknown mood '" + std::string(cols[2]) + "'");
    const auto polarity = parse_polarity(cols[3]);
    if (!polarity) throw ParseError(path, line_no, "unknown polarity '" + std::string(cols[3]) + "'");
    r.tense = *tense;
    r.mood = *mood;
    r.polarity = *polarity;
    if (cols[4] != "-")
      for (auto& w : detail::split_on(cols[4], ';')) r.emphasis.push_back(normalize(w));
    if (cols.size() == 6) {
      r.glosses.emplace();
      for (auto& w : detail::split_on(cols[5], ' ')) r.glosses->push_back(normalize(w));
    }
    records.push_back(std::move(r));
  }
  if (in.bad()) throw LoadError(path, "read error");
  return records;
}

inline std::vector<GoldRecord> load_gold(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return parse_gold(in, path);
}

// Evaluation -----------------------------------------------------------------------

struct Accuracy {
  std::size_t correct = 0;
  std::size_t total = 0;

  double value() const { return total == 0 ? 1.0 : static_cast<double>(correct) / total; }
  void add(bool ok) { correct += ok, ++total; }
};

struct EvalReport {
  std::size_t total = 0;
  Accuracy tense, mood, polarity, emphasis;
  Accuracy glosses;  // over records that list expected glosses
  std::vector<std::string> diffs;

  bool perfect() const {
    return tense.value() == 1.0 && mood.value() == 1.0 && polarity.value() == 1.0 &&
           emphasis.value() == 1.0 && glosses.value() == 1.0;
  }
};

inline std::string join(std::span<const std::string> xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

// Throws ParseError("empty corpus") when gold is empty. Each source must yield
// exactly one sentence; otherwise every category counts as a miss.
inline EvalReport evaluate(std::span<const GoldRecord> gold, const Lexicon& lexicon,
                           const RuleSet& rules) {
  if (gold.empty()) throw ParseError("", 0, "empty corpus");
  const Translator translator(lexicon, rules);
  EvalReport report;
  report.total = gold.size();
  for (const auto& g : gold) {
    const auto results = translator.translate(g.source);
    std::ostringstream diff;
    const std::string where = "line " + std::to_string(g.line) + " \"" + g.source + "\"";
    if (results.size() != 1) {
      report.tense.add(false);
      report.mood.add(false);
      report.polarity.add(false);
      report.emphasis.add(false);
      if (g.glosses) report.glosses.add(false);
      report.diffs.push_back(where + ": expected 1 sentence, got " + std::to_string(results.size()));
      continue;
    }
    const auto& f = results.front().features;
    auto check = [&](Accuracy& acc, std::string_view name, const std::string& want,
                     const std::string& got) {
      const bool ok = want == got;
      acc.add(ok);
      if (!ok) diff << "\n  " << name << ": expected " << want << ", got " << got;
    };
    check(report.tense, "tense", std::string(to_string(g.tense)), std::string(to_string(f.tense)));
    check(report.mood, "mood", to_string(g.mood), to_string(f.mood));
    check(report.polarity, "polarity", to_string(g.polarity), to_string(f.polarity));
    check(report.emphasis, "emphasis", "[" + join(g.emphasis, ";") + "]", "[" + join(f.emphasis, ";") + "]");
    if (g.glosses) {
      std::vector<std::string> got;
      for (const auto& t : results.front().gloss.glosses) got.push_back(t.gloss);
      check(report.glosses, "glosses", "[" + join(*g.glosses, " ") + "]", "[" + join(got, " ") + "]");
    }
    if (const auto d = diff.str(); !d.empty()) report.diffs.push_back(where + ":" + d);
  }
  return report;
}

inline std::string format_report(const EvalReport& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  auto row = [&](std::string_view name, const Accuracy& a) {
    out << name << '\t' << a.value() << '\t' << a.correct << '/' << a.total << '\n';
  };
  out << "sentences\t" << r.total << '\n';
  row("tense", r.tense);
  row("mood", r.mood);
  row("polarity", r.polarity);
  row("emphasis", r.emphasis);
  if (r.glosses.total) row("glosses", r.glosses);
  for (const auto& d : r.diffs) out << "DIFF " << d << '\n';
  return out.str();
}

inline nlohmann::ordered_json report_json(const EvalReport& r) {
  auto acc = [](const Accuracy& a) {
    return nlohmann::ordered_json{{"accuracy", a.value()}, {"correct", a.correct}, {"total", a.total}};
  };
  nlohmann::ordered_json j{{"sentences", r.total},
                           {"tense", acc(r.tense)},
                           {"mood", acc(r.mood)},
                           {"polarity", acc(r.polarity)},
                           {"emphasis", acc(r.emphasis)}};
  if (r.glosses.total) j["glosses"] = acc(r.glosses);
  j["diffs"] = r.diffs;
  return j;
}

}  // namespace msa2gloss

#endif  // MSA2GLOSS_PIPELINE_HPP
