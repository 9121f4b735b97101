// Copyright 2026 The implrep Authors
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

#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "implrep/errors.hpp"
#include "implrep/rational.hpp"

namespace implrep {

// Line-oriented tokenizer shared by the text formats: blank lines and lines
// starting with '#' are skipped, tokens are whitespace separated.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next meaningful line; false at end of input.
  bool next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens_.clear();
      for (std::string t; ss >> t;) tokens_.push_back(t);
      if (tokens_.empty() || tokens_[0][0] == '#') continue;
      return true;
    }
    tokens_.clear();
    return false;
  }

  const std::vector<std::string>& tokens() const { return tokens_; }
  int line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + message);
  }

  long long integer(std::size_t i) const {
    const std::string& s = tokens_.at(i);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) fail("expected integer, got '" + s + "'");
    return v;
  }

  Rational rational(std::size_t i) const {
    try {
      return parse_rational(tokens_.at(i));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

 private:
  std::istream& in_;
  std::vector<std::string> tokens_;
  int line_no_ = 0;
};

}  // namespace implrep
