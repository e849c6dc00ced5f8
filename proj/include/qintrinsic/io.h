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

// JSON file formats for states and POVMs.
//
// Complex numbers are [re, im] pairs and matrices are row-major. A matrix is
// written as a flat list of d*d pairs; nested rows are accepted on input.
// Composite system-ancilla indices follow index = a * m + q for system
// index a and ancilla index q.

#ifndef QINTRINSIC_IO_H_
#define QINTRINSIC_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qintrinsic/linalg.h"
#include "qintrinsic/povm.h"

namespace qintrinsic::io {

using Json = nlohmann::ordered_json;

/// Malformed input: unreadable file, bad JSON or wrong shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rounds to 12 significant digits so printed output is stable.
double round12(double x);

Json complex_to_json(Complex z);
Json vector_to_json(const ComplexVector &v);
Json matrix_to_json(const ComplexMatrix &m);

ComplexVector vector_from_json(const Json &j, int dim, const std::string &where);
ComplexMatrix matrix_from_json(const Json &j, int dim, const std::string &where);

/// Elements as written, without POVM validation.
std::vector<ComplexMatrix> povm_elements_from_json(const Json &j);
Povm povm_from_json(const Json &j);
Json povm_to_json(const Povm &p);

struct StateInput {
  std::optional<Ket> ket;
  DensityState state;
};

StateInput state_from_json(const Json &j);
Json ket_to_json(const Ket &k);
Json state_to_json(const DensityState &rho);

Json read_json_file(const std::string &path);
std::string dump(const Json &j);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace qintrinsic::io

#endif  // QINTRINSIC_IO_H_
