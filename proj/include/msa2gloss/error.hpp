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

#ifndef MSA2GLOSS_ERROR_HPP
#define MSA2GLOSS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace msa2gloss {

// A file could not be opened or read.
class LoadError : public std::runtime_error {
 public:
  LoadError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Malformed content in a lexicon, rule set or gold corpus file.
// line() is 1-based; 0 means the error is not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, std::size_t line, const std::string& what)
      : std::runtime_error(format(path, line, what)),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& path, std::size_t line,
                            const std::string& what) {
    std::string out = path.empty() ? std::string("<input>") : path;
    if (line != 0) out += ":" + std::to_string(line);
    return out + ": " + what;
  }

  std::string path_;
  std::size_t line_;
};

// An API precondition was violated by the caller.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace msa2gloss

#endif  // MSA2GLOSS_ERROR_HPP
