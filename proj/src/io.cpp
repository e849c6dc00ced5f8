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

#include "qintrinsic/io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qintrinsic/errors.h"

namespace qintrinsic::io {

namespace {

Complex pair_from_json(const Json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

int dim_from_json(const Json &j) {
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("dim: expected an integer");
  int d = j["dim"].get<int>();
  if (d < 1) throw ParseError("dim: must be positive");
  return d;
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json complex_to_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Json vector_to_json(const ComplexVector &v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json matrix_to_json(const ComplexMatrix &m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(complex_to_json(m(r, c)));
  }
  return out;
}

ComplexVector vector_from_json(const Json &j, int dim, const std::string &where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " amplitudes");
  }
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = pair_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

ComplexMatrix matrix_from_json(const Json &j, int dim, const std::string &where) {
  if (!j.is_array()) throw ParseError(where + ": expected a matrix");
  ComplexMatrix m(dim, dim);
  const bool nested = j.size() == static_cast<size_t>(dim) && !j.empty() && j[0].is_array() && !j[0].empty() &&
                      j[0][0].is_array();
  if (nested) {
    for (int r = 0; r < dim; ++r) {
      const std::string row = where + "[" + std::to_string(r) + "]";
      if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim) throw ParseError(row + ": wrong row length");
      for (int c = 0; c < dim; ++c) m(r, c) = pair_from_json(j[r][c], row + "[" + std::to_string(c) + "]");
    }
    return m;
  }
  if (static_cast<int>(j.size()) != dim * dim) {
    throw ParseError(where + ": expected " + std::to_string(dim * dim) + " entries");
  }
  for (int k = 0; k < dim * dim; ++k) m(k / dim, k % dim) = pair_from_json(j[k], where + "[" + std::to_string(k) + "]");
  return m;
}

std::vector<ComplexMatrix> povm_elements_from_json(const Json &j) {
  const int d = dim_from_json(j);
  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty()) {
    throw ParseError("elements: expected a non-empty list");
  }
  std::vector<ComplexMatrix> out;
  for (size_t i = 0; i < j["elements"].size(); ++i) {
    out.push_back(matrix_from_json(j["elements"][i], d, "elements[" + std::to_string(i) + "]"));
  }
  return out;
}

Povm povm_from_json(const Json &j) { return Povm(povm_elements_from_json(j)); }

Json povm_to_json(const Povm &p) {
  Json out;
  out["dim"] = p.dim();
  Json els = Json::array();
  for (const auto &e : p.elements()) els.push_back(matrix_to_json(e));
  out["elements"] = std::move(els);
  return out;
}

StateInput state_from_json(const Json &j) {
  const int d = dim_from_json(j);
  const bool has_ket = j.contains("ket");
  const bool has_matrix = j.contains("matrix");
  if (has_ket == has_matrix) throw ParseError("state: exactly one of ket or matrix is required");
  if (has_ket) {
    Ket k(vector_from_json(j["ket"], d, "ket"));
    return {k, DensityState::from_ket(k)};
  }
  return {std::nullopt, DensityState(matrix_from_json(j["matrix"], d, "matrix"))};
}

Json ket_to_json(const Ket &k) {
  Json out;
  out["dim"] = k.dim();
  out["ket"] = vector_to_json(k.amplitudes());
  return out;
}

Json state_to_json(const DensityState &rho) {
  Json out;
  out["dim"] = rho.dim();
  out["matrix"] = matrix_to_json(rho.matrix());
  return out;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Json j = Json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw ParseError(path + ": malformed JSON");
  return j;
}

namespace {

// Scalars and [re, im] pairs stay on one line.
bool is_leaf_array(const Json &j) {
  for (const auto &e : j) {
    if (e.is_object()) return false;
    if (e.is_array()) {
      for (const auto &x : e) {
        if (x.is_structured()) return false;
      }
    }
  }
  return true;
}

void pretty(const Json &j, int depth, std::string &out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + Json(it.key()).dump() + ": ";
      pretty(it.value(), depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !j.empty() && !is_leaf_array(j)) {
    out += "[\n";
    for (size_t k = 0; k < j.size(); ++k) {
      out += pad;
      pretty(j[k], depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else {
    out += j.dump(-1, ' ', false, Json::error_handler_t::replace);
  }
}

}  // namespace

std::string dump(const Json &j) {
  std::string out;
  pretty(j, 0, out);
  out += "\n";
  return out;
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("cannot write " + path);
}

}  // namespace qintrinsic::io
