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

// qintrinsic command-line front end. Reports are JSON objects on stdout.
// Exit codes: 0 success, 1 domain failure, 2 I/O or parse failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qintrinsic/errors.h"
#include "qintrinsic/io.h"
#include "qintrinsic/naimark.h"
#include "qintrinsic/oracle.h"
#include "qintrinsic/povm.h"
#include "qintrinsic/randomness.h"

namespace {

using qintrinsic::io::Json;
namespace q = qintrinsic;
namespace io = qintrinsic::io;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kParseFailure = 2;

void emit(const Json &j) { std::cout << io::dump(j) << std::flush; }

Json error_json(const std::string &kind, const std::string &message) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  Json out;
  out["error"] = std::move(e);
  return out;
}

Json doubles(const std::vector<double> &v) {
  Json out = Json::array();
  for (double x : v) out.push_back(io::round12(x));
  return out;
}

Json decomposition_json(const q::Decomposition &dec) {
  Json out;
  out["weights"] = doubles(dec.weights);
  Json comps = Json::array();
  for (const auto &c : dec.components) comps.push_back(io::povm_to_json(c));
  out["components"] = std::move(comps);
  return out;
}

Json ensemble_json(const q::PureDecomposition &ens) {
  Json out;
  out["weights"] = doubles(ens.weights);
  Json kets = Json::array();
  for (const auto &k : ens.kets) kets.push_back(io::vector_to_json(k.amplitudes()));
  out["kets"] = std::move(kets);
  return out;
}

Json notes_json(const std::vector<std::string> &notes) {
  Json out = Json::array();
  for (const auto &n : notes) out.push_back(n);
  return out;
}

q::Measure parse_measure(const std::string &s) { return s == "rq" ? q::Measure::Rq : q::Measure::Rc; }

int cmd_validate(const std::string &povm_path) {
  std::vector<q::ComplexMatrix> elements = io::povm_elements_from_json(io::read_json_file(povm_path));
  q::PovmDiagnostics diag = q::diagnose(elements);
  Json out;
  out["command"] = "validate";
  out["dim"] = static_cast<int>(elements.front().rows());
  out["outcomes"] = static_cast<int>(elements.size());
  out["hermitian_residual"] = io::round12(diag.hermitian_residual);
  out["min_eigenvalue"] = io::round12(diag.min_eigenvalue);
  out["min_eigenvalue_element"] = diag.min_eigenvalue_index;
  out["completeness_residual"] = io::round12(diag.completeness_residual);
  try {
    q::Povm p(elements);
    q::ExtremalityVerdict v = q::extremality_check(p);
    out["valid"] = true;
    out["extremality"] = q::to_string(v.status);
    out["rank"] = v.rank;
    if (v.witness) out["witness"] = doubles(*v.witness);
    emit(out);
    return kOk;
  } catch (const q::Error &e) {
    out["valid"] = false;
    out["error"] = error_json(e.kind(), e.what())["error"];
    emit(out);
    return kDomainFailure;
  }
}

int cmd_randomness(const std::string &povm_path, const std::string &state_path, const std::string &measure_name,
                   const std::string &mode, std::uint64_t seed, int restarts) {
  q::Povm p = io::povm_from_json(io::read_json_file(povm_path));
  io::StateInput in = io::state_from_json(io::read_json_file(state_path));
  q::Measure measure = parse_measure(measure_name);
  q::OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;

  q::ExtremalityVerdict verdict = q::extremality_check(p);
  std::string resolved = mode;
  if (mode == "auto") resolved = verdict.status == q::Extremality::Extremal ? "extremal" : "cf";
  q::RandomnessReport rep = resolved == "extremal" ? q::r_extremal(in.state, p, measure, cfg)
                                                   : q::r_cf(in.state, p, measure, cfg);

  Json out;
  out["command"] = "randomness";
  out["measure"] = q::to_string(measure);
  out["mode"] = resolved;
  out["extremality"] = q::to_string(verdict.status);
  out["value"] = io::round12(rep.value);
  out["bound_type"] = q::to_string(rep.bound_type);
  out["seed"] = seed;
  out["restarts"] = restarts;
  Json cert = Json::object();
  Json residuals = Json::object();
  if (rep.decomposition) {
    cert["decomposition"] = decomposition_json(*rep.decomposition);
    residuals["decomposition"] = io::round12(q::verify_decomposition(*rep.decomposition, p));
  }
  if (rep.ensemble) {
    cert["ensemble"] = ensemble_json(*rep.ensemble);
    residuals["ensemble"] = io::round12(q::max_abs(rep.ensemble->density() - in.state.matrix()));
  }
  out["certificate"] = std::move(cert);
  out["residuals"] = std::move(residuals);
  out["notes"] = notes_json(rep.notes);
  emit(out);
  return kOk;
}

int cmd_min_randomness(const std::string &povm_path, const std::string &measure_name, std::uint64_t seed) {
  q::Povm p = io::povm_from_json(io::read_json_file(povm_path));
  q::Measure measure = parse_measure(measure_name);
  q::OptimizerConfig cfg;
  cfg.seed = seed;
  q::RandomnessReport rep = q::min_randomness(p, measure, cfg);

  Json out;
  out["command"] = "min-randomness";
  out["measure"] = q::to_string(measure);
  out["value"] = io::round12(rep.value);
  out["bound_type"] = q::to_string(rep.bound_type);
  out["seed"] = seed;
  if (rep.ensemble) out["argmin"] = io::ket_to_json(rep.ensemble->kets.front());
  const bool sic = q::is_sic(p);
  out["sic"] = sic;
  if (sic) {
    const double bound = q::sic_lower_bound(p.dim());
    out["sic_lower_bound"] = io::round12(bound);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5f", bound);
    out["flag"] = std::string(rep.value > bound ? "exceeds" : "does not exceed") + " SIC lower bound " + buf;
  }
  out["notes"] = notes_json(rep.notes);
  emit(out);
  return kOk;
}

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", io::round12(x));
  return buf;
}

int cmd_figure3(int steps, std::uint64_t seed, const std::string &out_path) {
  if (steps < 2) {
    emit(error_json("InvalidArgument", "--mu-steps must be at least 2"));
    return kDomainFailure;
  }
  const q::Povm families[3] = {q::vn_x_qubit(), q::mub_qubit(), q::sic_qubit()};
  const double intercepts[3] = {1.0, 0.5, 1.0 + 0.5 * std::log2(3.0)};
  const q::DensityState ket0 = q::DensityState::from_ket(q::Ket::basis(2, 0));
  q::OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.restarts = 8;

  std::ostringstream csv;
  csv << "mu,rcf_vn,rcf_mub,rcf_sic,analytic_vn,analytic_mub,analytic_sic\n";
  double worst = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double mu = static_cast<double>(k) / (steps - 1);
    double computed[3];
    for (int f = 0; f < 3; ++f) {
      computed[f] = q::r_cf(ket0, q::depolarize(families[f], mu), q::Measure::Rc, cfg).value;
      worst = std::max(worst, std::abs(computed[f] - (1.0 - mu) * intercepts[f]));
    }
    csv << csv_number(mu);
    for (double c : computed) csv << ',' << csv_number(c);
    for (double a : intercepts) csv << ',' << csv_number((1.0 - mu) * a);
    csv << '\n';
  }
  if (out_path.empty()) {
    std::cout << csv.str() << std::flush;
    return kOk;
  }
  io::write_text_file(out_path, csv.str());
  Json out;
  out["command"] = "figure3";
  out["rows"] = steps;
  out["seed"] = seed;
  out["out"] = out_path;
  out["max_abs_deviation_from_linear"] = io::round12(worst);
  emit(out);
  return kOk;
}

int cmd_naimark(const std::string &povm_path, const std::string &out_path) {
  q::Povm p = io::povm_from_json(io::read_json_file(povm_path));
  q::NaimarkExtension ext = q::canonical_extension(p);
  const double residual = q::consistency_check(ext, p);
  Json out;
  out["command"] = "naimark";
  out["convention"] = "composite index = a * ancilla_dim + q (system a, ancilla q)";
  out["system_dim"] = ext.system_dim;
  out["ancilla_dim"] = ext.ancilla_dim;
  out["total_dim"] = ext.system_dim * ext.ancilla_dim;
  out["ancilla_index"] = ext.ancilla_index;
  out["unitary"] = io::matrix_to_json(ext.unitary);
  Json projectors = Json::array();
  for (const auto &proj : ext.pvm.projectors()) projectors.push_back(io::matrix_to_json(proj));
  out["projectors"] = std::move(projectors);
  out["residual"] = io::round12(residual);
  const bool ok = residual < 1e-8;
  out["consistent"] = ok;
  if (!out_path.empty()) io::write_text_file(out_path, io::dump(out));
  emit(out);
  return ok ? kOk : kDomainFailure;
}

int cmd_decompose(const std::string &povm_path) {
  q::Povm p = io::povm_from_json(io::read_json_file(povm_path));
  q::Decomposition dec = q::extremal_decompose(p);
  Json out;
  out["command"] = "decompose";
  Json body = decomposition_json(dec);
  out["weights"] = body["weights"];
  out["components"] = body["components"];
  out["residual"] = io::round12(q::verify_decomposition(dec, p));
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Intrinsic randomness of quantum measurements"};
  app.require_subcommand(1);

  std::string povm_path, state_path, out_path;
  std::string measure = "rc";
  std::string mode = "auto";
  std::uint64_t seed = 0;
  int restarts = 32;
  int mu_steps = 5;
  const auto measures = CLI::IsMember({"rc", "rq"});

  auto *validate = app.add_subcommand("validate", "Check POVM invariants and extremality");
  validate->add_option("povm", povm_path, "POVM JSON file")->required();

  auto *randomness = app.add_subcommand("randomness", "Randomness of a POVM on a state");
  randomness->add_option("povm", povm_path, "POVM JSON file")->required();
  randomness->add_option("state", state_path, "State JSON file")->required();
  randomness->add_option("--measure", measure, "rc or rq")->check(measures);
  randomness->add_option("--mode", mode, "auto, extremal or cf")->check(CLI::IsMember({"auto", "extremal", "cf"}));
  randomness->add_option("--seed", seed, "Random seed");
  randomness->add_option("--restarts", restarts, "Optimizer restarts")->check(CLI::PositiveNumber);

  auto *minr = app.add_subcommand("min-randomness", "Minimum randomness over pure inputs");
  minr->add_option("povm", povm_path, "POVM JSON file")->required();
  minr->add_option("--measure", measure, "rc or rq")->check(measures);
  minr->add_option("--seed", seed, "Random seed");

  auto *fig = app.add_subcommand("figure3", "Depolarizing sweep for the qubit X, MUB and SIC POVMs on |0>");
  fig->add_option("--mu-steps", mu_steps, "Number of noise levels");
  fig->add_option("--seed", seed, "Random seed");
  fig->add_option("--out", out_path, "CSV output path");

  auto *naimark = app.add_subcommand("naimark", "Canonical Naimark extension");
  naimark->add_option("povm", povm_path, "POVM JSON file")->required();
  naimark->add_option("--out", out_path, "Also write the report to this path");

  auto *decompose = app.add_subcommand("decompose", "Decompose into extremal POVMs");
  decompose->add_option("povm", povm_path, "POVM JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    emit(error_json("UsageError", e.what()));
    return kParseFailure;
  }

  try {
    if (*validate) return cmd_validate(povm_path);
    if (*randomness) return cmd_randomness(povm_path, state_path, measure, mode, seed, restarts);
    if (*minr) return cmd_min_randomness(povm_path, measure, seed);
    if (*fig) return cmd_figure3(mu_steps, seed, out_path);
    if (*naimark) return cmd_naimark(povm_path, out_path);
    if (*decompose) return cmd_decompose(povm_path);
  } catch (const io::ParseError &e) {
    emit(error_json("ParseError", e.what()));
    return kParseFailure;
  } catch (const nlohmann::json::exception &e) {
    emit(error_json("ParseError", e.what()));
    return kParseFailure;
  } catch (const q::Error &e) {
    emit(error_json(e.kind(), e.what()));
    return kDomainFailure;
  }
  return kDomainFailure;
}
