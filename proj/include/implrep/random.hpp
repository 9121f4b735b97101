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

#include <cstdint>
#include <random>
#include <vector>

#include "implrep/rational.hpp"

namespace implrep {

// Seeded generator used by every family builder. The engine is std::mt19937_64
// (fully specified by the standard); the mappings below are our own so that
// instances are reproducible across standard libraries and languages:
//   below(n):        rejection sampling on the top-aligned 64-bit output
//   unit():          (next() >> 11) * 2^-53
//   bernoulli(p):    unit() < p
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive
  double unit();
  bool bernoulli(double p) { return unit() < p; }

  // Rational k/den with k uniform in [lo*den, hi*den).
  Rational uniform_rational(std::int64_t lo, std::int64_t hi, std::int64_t den);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace implrep
