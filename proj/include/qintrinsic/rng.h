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

#ifndef QINTRINSIC_RNG_H_
#define QINTRINSIC_RNG_H_

#include <cstdint>

#include "qintrinsic/linalg.h"

namespace qintrinsic {

/// Counter-based generator: draw k is a hash of (seed, k), so streams are
/// reproducible and can be split without shared state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t counter = 0) : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  /// Uniform on (0, 1).
  double uniform();
  double normal();
  /// Standard complex Gaussian (unit variance split over both parts).
  Complex complex_normal();
  /// Independent generator for a numbered sub-task.
  Rng substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace qintrinsic

#endif  // QINTRINSIC_RNG_H_
