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

// Command-line front end: translate, analyze, eval.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "msa2gloss/msa2gloss.hpp"

#ifndef MSA2GLOSS_DEFAULT_LEXICON
#define MSA2GLOSS_DEFAULT_LEXICON "data/lexicon.tsv"
#endif

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kGoldError = 2;

struct Options {
  std::string lexicon = MSA2GLOSS_DEFAULT_LEXICON;
  std::string rules;
  std::string format = "inline";
  std::string input = "-";
};

// Owns the file stream when input is not stdin.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw msa2gloss::LoadError(path, "cannot open input");
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

struct Config {
  msa2gloss::Lexicon lexicon;
  msa2gloss::RuleSet rules;
  msa2gloss::Format format;
};

Config load_config(const Options& opt) {
  const auto format = msa2gloss::parse_format(opt.format);
  if (!format) throw std::invalid_argument("unknown format '" + opt.format + "'");
  return {msa2gloss::load_lexicon(opt.lexicon),
          opt.rules.empty() ? msa2gloss::RuleSet::defaults() : msa2gloss::load_rules(opt.rules),
          *format};
}

int run_translate(const Options& opt) {
  const auto cfg = load_config(opt);
  Input in(opt.input);
  msa2gloss::run_pipeline(in.stream(), std::cout, cfg.lexicon, cfg.rules, cfg.format);
  std::cout.flush();
  return kOk;
}

int run_analyze(const Options& opt) {
  const auto cfg = load_config(opt);
  Input in(opt.input);
  const msa2gloss::Translator translator(cfg.lexicon, cfg.rules);
  std::string line;
  while (std::getline(in.stream(), line))
    for (const auto& r : translator.translate(line))
      std::cout << msa2gloss::analysis_json(r).dump() << '\n';
  std::cout.flush();
  return kOk;
}

int run_eval(const Options& opt) {
  const auto cfg = load_config(opt);
  std::vector<msa2gloss::GoldRecord> gold;
  try {
    Input in(opt.input);
    gold = msa2gloss::parse_gold(in.stream(), opt.input == "-" ? "<stdin>" : opt.input);
    if (gold.empty()) throw msa2gloss::ParseError(opt.input, 0, "empty corpus");
  } catch (const msa2gloss::ParseError& e) {
    std::cerr << "msa2gloss: " << e.what() << '\n';
    return kGoldError;
  }
  const auto report = msa2gloss::evaluate(gold, cfg.lexicon, cfg.rules);
  if (cfg.format == msa2gloss::Format::Json)
    std::cout << msa2gloss::report_json(report).dump(2) << '\n';
  else
    std::cout << msa2gloss::format_report(report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modern Standard Arabic to sign-language gloss transpiler"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--lexicon", opt.lexicon, "Lexicon TSV")->capture_default_str();
    sub->add_option("--rules", opt.rules, "Rule set override file");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"inline", "json", "tsv"}))
        ->capture_default_str();
    sub->add_option("--input", opt.input, "Input file, or - for stdin")->capture_default_str();
  };

  auto* translate = app.add_subcommand("translate", "Translate sentences to gloss");
  auto* analyze = app.add_subcommand("analyze", "Emit per-token analyses as JSON lines");
  auto* eval = app.add_subcommand("eval", "Evaluate against a gold corpus TSV");
  add_common(translate);
  add_common(analyze);
  add_common(eval);
  eval->add_option("--gold", opt.input, "Gold corpus TSV (same as --input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  try {
    if (*translate) return run_translate(opt);
    if (*analyze) return run_analyze(opt);
    return run_eval(opt);
  } catch (const std::exception& e) {
    // Lexicon, rule set and input errors all land here.
    std::cerr << "msa2gloss: " << e.what() << '\n';
  }
  return kConfigError;
}
