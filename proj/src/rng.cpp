// Copyright 2026 The qintrinsic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qintrinsic/rng.h"

#include <cmath>
#include <numbers>

namespace qintrinsic {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() { return splitmix(splitmix(seed_) ^ (counter_++ * 0xD1B54A32D192ED03ULL)); }

double Rng::uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-std::log(u1));
  return std::polar(r, 2.0 * std::numbers::pi * u2);
}

Rng Rng::substream(std::uint64_t index) const {
  return Rng(splitmix(seed_ ^ splitmix(index + 0x632BE59BD9B4E019ULL)), 0);
}

}  // namespace qintrinsic
