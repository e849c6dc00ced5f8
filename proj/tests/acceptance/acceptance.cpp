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

// Acceptance gate. Prints one PASS/FAIL line per criterion.
//   acceptance [--criterion N] [--cli PATH] [--data DIR]

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "qintrinsic/naimark.h"
#include "qintrinsic/oracle.h"
#include "qintrinsic/povm.h"
#include "qintrinsic/randomness.h"
#include "qintrinsic/rng.h"

using namespace qintrinsic;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char *f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Pvm random_pvm(int d, Rng &rng) {
  ComplexMatrix u = random_unitary(d, rng);
  std::vector<ComplexMatrix> ps;
  for (int k = 0; k < d; ++k) ps.push_back(u.col(k) * u.col(k).adjoint());
  return Pvm(ps);
}

Outcome figure3_curves() {
  const Povm families[3] = {vn_x_qubit(), mub_qubit(), sic_qubit()};
  const char *names[3] = {"vn", "mub", "sic"};
  const double intercepts[3] = {1.0, 0.5, 1.0 + 0.5 * std::log2(3.0)};
  const DensityState k0 = DensityState::from_ket(Ket::basis(2, 0));
  OptimizerConfig cfg;
  cfg.restarts = 8;
  auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string where;
  std::ostringstream table;
  for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (int f = 0; f < 3; ++f) {
      const double v = r_cf(k0, depolarize(families[f], mu), Measure::Rc, cfg).value;
      const double dev = std::abs(v - (1.0 - mu) * intercepts[f]);
      table << " " << names[f] << "(" << mu << ")=" << fmt("%.5f", v);
      if (dev > worst) {
        worst = dev;
        where = std::string(names[f]) + " mu=" + fmt("%.2f", mu);
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-2 && secs < 120.0,
          "max deviation from (1-mu)*R(0) " + fmt("%.4g", worst) + " at " + where + ", " + fmt("%.1f", secs) + " s;" +
              table.str()};
}

Outcome sic_state_independence() {
  OptimizerConfig cfg;
  RandomnessReport rep = min_randomness(sic_qubit(), Measure::Rc, cfg);
  const double grid = brute_force_min_pure(sic_qubit(), 64).value;
  const double target = std::log2(3.0);
  const bool ok = std::abs(rep.value - target) <= 1e-3 && rep.value > sic_lower_bound(2) &&
                  std::abs(rep.value - grid) <= 5e-3;
  return {ok, "optimizer " + fmt("%.6f", rep.value) + ", grid " + fmt("%.6f", grid) + ", bound " +
                  fmt("%.5f", sic_lower_bound(2))};
}

Outcome extension_consistency() {
  Rng rng(1001);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng sub = rng.substream(k);
    const int d = 2 + k % 2;
    const int rank = k % 4 == 0 ? 1 : 0;
    const int m = std::max(rank == 1 ? d : 1, 1 + static_cast<int>(sub.next_u64() % (d * d)));
    Povm p = random_povm(d, m, sub, rank);
    worst = std::max(worst, consistency_check(canonical_extension(p), p));
  }
  return {worst < 1e-8, "max residual " + fmt("%.3g", worst) + " over 100 POVMs"};
}

Outcome decomposition_round_trip() {
  Rng rng(1002);
  double worst = 0.0;
  int bad_leaves = 0, leaves = 0;
  for (int k = 0; k < 100; ++k) {
    Rng sub = rng.substream(k);
    const int d = 2 + k % 2;
    const int rank = k % 3 == 0 ? 1 : 0;
    const int m = std::max(rank == 1 ? d : 2, 2 + static_cast<int>(sub.next_u64() % (d * d - 1)));
    Povm p = random_povm(d, m, sub, rank);
    Decomposition dec = extremal_decompose(p);
    worst = std::max(worst, verify_decomposition(dec, p));
    for (const auto &leaf : dec.refined_components) {
      ++leaves;
      if (extremality_check(leaf).status != Extremality::Extremal) ++bad_leaves;
    }
  }
  return {worst < 1e-8 && bad_leaves == 0, "max residual " + fmt("%.3g", worst) + ", " + std::to_string(bad_leaves) +
                                               " of " + std::to_string(leaves) + " leaves not independent"};
}

Outcome functional_identities() {
  Rng rng(1003);
  double worst_q = 0.0, worst_pure = 0.0;
  for (int k = 0; k < 200; ++k) {
    Rng sub = rng.substream(k);
    const int d = 2 + k % 2;
    Pvm p = random_pvm(d, sub);
    DensityState rho = random_density(d, 1 + k % d, sub);
    DensityState deph = block_dephase(rho, p);
    const double rq = r_q_pvm(rho, p);
    worst_q = std::max({worst_q, std::abs(rq - (von_neumann_entropy(deph) - von_neumann_entropy(rho))),
                        std::abs(rq - relative_entropy(rho, deph))});
    DensityState pure = DensityState::from_ket(random_ket(d, sub));
    worst_pure = std::max(worst_pure, std::abs(r_c_pvm(pure, p).value - r_q_pvm(pure, p)));
  }
  return {worst_q <= 1e-8 && worst_pure <= 1e-9,
          "r_q identity " + fmt("%.3g", worst_q) + ", pure r_c - r_q " + fmt("%.3g", worst_pure)};
}

Outcome convexity_and_additivity() {
  Rng rng(1004);
  OptimizerConfig cfg;
  cfg.restarts = 8;
  double exact = 0.0, optimized = 0.0;  // worst violations
  for (int k = 0; k < 40; ++k) {
    Rng sub = rng.substream(k);
    const int d = 2 + k % 2;
    Pvm p = random_pvm(d, sub);
    DensityState a = random_density(d, 1 + k % d, sub);
    DensityState b = random_density(d, 1 + (k + 1) % d, sub);
    const double t = sub.uniform();
    DensityState mixed(t * a.matrix() + (1.0 - t) * b.matrix());
    exact = std::max(exact, r_q_pvm(mixed, p) - t * r_q_pvm(a, p) - (1.0 - t) * r_q_pvm(b, p));
    const Povm sic = d == 2 ? sic_qubit() : sic_qutrit();
    exact = std::max(exact, r_q_direct(mixed, sic) - t * r_q_direct(a, sic) - (1.0 - t) * r_q_direct(b, sic));
    if (k < 12) {
      optimized = std::max(optimized, r_c_pvm(mixed, p, cfg).value - t * r_c_pvm(a, p, cfg).value -
                                          (1.0 - t) * r_c_pvm(b, p, cfg).value);
    }
  }
  // Block-diagonal states against block-diagonal PVMs on C^2 (+) C^2.
  for (int k = 0; k < 12; ++k) {
    Rng sub = rng.substream(100 + k);
    Pvm p1 = random_pvm(2, sub), p2 = random_pvm(2, sub);
    DensityState r1 = random_density(2, 2, sub), r2 = random_density(2, 2, sub);
    const double t = sub.uniform();
    ComplexMatrix big = ComplexMatrix::Zero(4, 4);
    big.topLeftCorner(2, 2) = t * r1.matrix();
    big.bottomRightCorner(2, 2) = (1.0 - t) * r2.matrix();
    std::vector<ComplexMatrix> projs;
    for (int i = 0; i < 2; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(4, 4);
      e.topLeftCorner(2, 2) = p1[i];
      projs.push_back(e);
    }
    for (int i = 0; i < 2; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(4, 4);
      e.bottomRightCorner(2, 2) = p2[i];
      projs.push_back(e);
    }
    Pvm p(projs);
    DensityState rho(big);
    exact = std::max(exact, std::abs(r_q_pvm(rho, p) - t * r_q_pvm(r1, p1) - (1.0 - t) * r_q_pvm(r2, p2)));
    optimized = std::max(optimized, std::abs(r_c_pvm(rho, p, cfg).value - t * r_c_pvm(r1, p1, cfg).value -
                                             (1.0 - t) * r_c_pvm(r2, p2, cfg).value));
  }
  return {exact <= 1e-6 && optimized <= 1e-3,
          "exact functionals " + fmt("%.3g", exact) + ", optimizer outputs " + fmt("%.3g", optimized)};
}

Outcome non_random_states() {
  Rng rng(1005);
  OptimizerConfig cfg;
  cfg.restarts = 4;
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    Rng sub = rng.substream(k);
    const int d = 2 + k % 2;
    const int m = 2 + k % 3;
    // Elements block-diagonal in a basis whose first vector is the input.
    ComplexMatrix u = random_unitary(d, sub);
    Povm inner = random_povm(d - 1, m, sub);
    std::vector<double> w;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      w.push_back(sub.uniform());
      total += w.back();
    }
    std::vector<ComplexMatrix> els;
    for (int i = 0; i < m; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(0, 0) = w[i] / total;
      e.bottomRightCorner(d - 1, d - 1) = inner[i];
      els.push_back(u * e * u.adjoint());
    }
    Povm p(els);
    Ket psi = Ket::normalized(u.col(0));
    DensityState rho = DensityState::from_ket(psi);
    if (!is_non_random_pure(psi, p) || !commutation_check(rho, p)) {
      ++failures;
      continue;
    }
    const double v = r_cf(rho, p, Measure::Rc, cfg).value;
    worst = std::max(worst, v);
    if (v >= 1e-6) ++failures;
  }
  int sic_hits = 0;
  Rng haar(1006);
  for (int k = 0; k < 1000; ++k) {
    if (is_non_random_pure(random_ket(2, haar), sic_qubit())) ++sic_hits;
  }
  return {failures == 0 && sic_hits == 0, std::to_string(failures) + " failing instances, max r_cf " +
                                              fmt("%.3g", worst) + ", " + std::to_string(sic_hits) +
                                              " non-random kets under SIC"};
}

Outcome bounds() {
  Rng rng(1007);
  double slack = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    DensityState rho = random_density(2, 1 + k % 2, rng);
    std::vector<double> probs;
    const Povm sic = sic_qubit();
    for (const auto &e : sic.elements()) probs.push_back((rho.matrix() * e).trace().real());
    slack = std::min(slack, shannon_entropy(probs) - rastegin_bound(rho));
  }
  const double rq = r_q_direct(DensityState::maximally_mixed(2), sic_qubit());
  return {slack >= -1e-12 && rq <= mixed_upper_bound(2) + 1e-12,
          "min Born entropy minus bound " + fmt("%.4g", slack) + ", r_q(1/2, SIC) " + fmt("%.6f", rq)};
}

std::string run_capture(const std::string &cmd, int &status) {
  std::string out;
  FILE *pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_determinism(const std::string &cli, const std::string &data) {
  if (cli.empty()) return {false, "no --cli given"};
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / ("qintrinsic_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  const std::string sic = data + "/sic2.json", mub = data + "/mub2.json", k0 = data + "/ket0.json";
  const std::string mixed = data + "/mixed2.json";
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"validate " + sic, ""},
      {"validate " + data + "/trivial2.json", ""},
      {"randomness " + sic + " " + k0 + " --seed 7", ""},
      {"randomness " + mub + " " + k0 + " --mode cf --seed 7 --restarts 4", ""},
      {"randomness " + mub + " " + mixed + " --measure rq --seed 7 --restarts 2", ""},
      {"min-randomness " + sic + " --seed 7", ""},
      {"naimark " + sic + " --out " + (tmp / "naimark.json").string(), (tmp / "naimark.json").string()},
      {"decompose " + mub, ""},
      {"figure3 --mu-steps 3 --seed 7 --out " + (tmp / "fig.csv").string(), (tmp / "fig.csv").string()},
  };
  int differing = 0;
  std::string first_diff;
  for (const auto &[args, file] : cmds) {
    int s1 = 0, s2 = 0;
    std::string a = run_capture(cli + " " + args, s1);
    std::string fa = file.empty() ? "" : slurp(file);
    std::string b = run_capture(cli + " " + args, s2);
    std::string fb = file.empty() ? "" : slurp(file);
    if (a != b || fa != fb || s1 != s2 || a.empty()) {
      ++differing;
      if (first_diff.empty()) first_diff = args.substr(0, args.find(' '));
    }
  }
  fs::remove_all(tmp);
  return {differing == 0, std::to_string(cmds.size() - differing) + " of " + std::to_string(cmds.size()) +
                              " commands byte-identical" + (first_diff.empty() ? "" : ", first mismatch: " + first_diff)};
}

}  // namespace

int main(int argc, char **argv) {
  int only = 0;
  std::string cli, data = "data";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--criterion") only = std::atoi(argv[i + 1]);
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--data") data = argv[i + 1];
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"depolarized X/MUB/SIC curves on |0> are linear in mu", figure3_curves},
      {"SIC qubit minimum randomness is log2(3)", sic_state_independence},
      {"canonical Naimark extension consistency", extension_consistency},
      {"extremal decomposition round trip", decomposition_round_trip},
      {"r_q and pure-state r_c identities", functional_identities},
      {"convexity and block additivity", convexity_and_additivity},
      {"non-random state logic", non_random_states},
      {"entropic bounds", bounds},
      {"CLI determinism", [&] { return cli_determinism(cli, data); }},
  };
  bool all = true;
  for (size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<int>(k) + 1 != only) continue;
    Outcome o = criteria[k].second();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << o.detail
              << ")" << std::endl;
  }
  return all ? 0 : 1;
}
