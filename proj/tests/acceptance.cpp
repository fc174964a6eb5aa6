// Copyright 2026 The cohsep Authors
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

// Acceptance gate. Prints one PASS/FAIL line per criterion, writes a JSON
// report (default acceptance_report.json, or the path given as argv[1]) and
// exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_helpers.hpp"

using namespace cohsep;
using io::json;

namespace {

constexpr std::uint64_t kCorpusSize = 5000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

//------------------------------------------------------------------------------
// Corpora
//------------------------------------------------------------------------------

// Generic states: the rank cycles through 1..dim with the seed.
DensityMatrix generic_state(const Dims& dims, std::uint64_t seed) {
  const std::size_t dim = dims_product(dims);
  return random_density(dims, 1 + seed % dim, seed);
}

// Separable states: 1 to 4 product terms, factor ranks drawn per term.
DensityMatrix separable_state(const Dims& dims, std::uint64_t seed) {
  return random_separable(dims, 1 + seed % 4, seed);
}

// Three-qubit ensembles of 1 to 3 product terms rhoA (x) rhoB (x) rhoC.
TripartiteEnsemble product_ensemble(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t k = 1 + static_cast<std::size_t>(rng.integer(0, 2));
  std::vector<double> w(k);
  double total = 0.0;
  for (auto& x : w) total += (x = rng.exponential());
  std::vector<EnsembleTerm> terms;
  for (std::size_t i = 0; i < k; ++i) {
    ComplexMatrix term = random_density_matrix(2, rng.integer(1, 2), rng);
    for (int f = 0; f < 2; ++f)
      term = tensor_product(term, random_density_matrix(2, rng.integer(1, 2), rng));
    terms.push_back({w[i] / total, std::move(term)});
  }
  // Rescale the last weight so the sum is 1 to rounding.
  double head = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) head += terms[i].weight;
  terms.back().weight = 1.0 - head;
  return TripartiteEnsemble({2, 2, 2}, std::move(terms), Party::A);
}

//------------------------------------------------------------------------------
// Criteria 1-5: worked examples
//------------------------------------------------------------------------------

Outcome example2_regression() {
  Outcome o;
  for (int i = 1; i <= 100; ++i) {
    const double a = i / 100.0;
    const auto r = theorem2_check(family_build("example2", {{"a", a}}));
    const double lhs = 6 * a / (6 * a + 1);
    const double rhs = 4 * a * a / ((6 * a + 1) * (6 * a + 1));
    o.require(near(r.lhs, lhs, 1e-10), "lhs at a=" + num(a));
    o.require(near(r.rhs, rhs, 1e-10), "rhs at a=" + num(a));
    o.require(r.verdict == Verdict::Entangled, "verdict at a=" + num(a));
  }
  o.detail << "100 grid points";
  return o;
}

Outcome illustration1_regression() {
  Outcome o;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const auto r = corollary2_check(family_ensemble("illustration1", {{"p", p}}));
    o.require(near(r.lhs, 1.0, 1e-12), "lhs at p=" + num(p));
    o.require(near(r.rhs, 0.0, 1e-12), "rhs at p=" + num(p));
    o.require(r.verdict == Verdict::Entangled, "verdict at p=" + num(p));
  }
  o.detail << "11 grid points";
  return o;
}

Outcome illustration2_regression() {
  Outcome o;
  const double r2 = std::sqrt(2.0);
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto r = corollary2_check(family_ensemble("illustration2", {{"p", p}}));
    o.require(near(r.lhs, 6 * (1 + r2) / 5, 1e-10), "lhs at p=" + num(p));
    o.require(near(r.rhs, (10 + 14 * r2) / 25 + (28 - 14 * r2) / 25 * p, 1e-9), "rhs at p=" + num(p));
    o.require(r.verdict == Verdict::Entangled, "verdict at p=" + num(p));
  }
  o.detail << "5 grid points";
  return o;
}

Outcome illustration3_regression() {
  Outcome o;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const auto r = corollary2_check(family_ensemble("illustration3", {{"p", p}}));
    o.require(near(r.lhs, 2 * p, 1e-10), "lhs at p=" + num(p));
    o.require(near(r.rhs, 2 * p, 1e-10), "rhs at p=" + num(p));
    o.require(r.verdict == Verdict::Inconclusive, "verdict at p=" + num(p));
  }
  o.detail << "11 grid points";
  return o;
}

Outcome example1_threshold() {
  Outcome o;
  double flip = -1.0;
  bool monotone = true;
  for (int i = 0; i <= 250; ++i) {
    const double c = i * 1e-3;
    const auto r = theorem1_check(family_build("example1", {{"c", c}, {"f", c}}));
    const bool entangled = r.verdict == Verdict::Entangled;
    if (entangled && flip < 0) flip = c;
    if (!entangled && flip >= 0) monotone = false;
  }
  o.require(flip >= 0, "no flip found");
  o.require(monotone, "verdict flips back");
  o.require(std::abs(flip - 1.0 / 16.0) <= 1e-3 + 1e-12, "flip at c=" + num(flip));
  o.detail << "first Entangled at c=" << num(flip);
  return o;
}

//------------------------------------------------------------------------------
// Criteria 6-8: populations
//------------------------------------------------------------------------------

struct OracleStats {
  std::uint64_t states = 0;
  std::uint64_t npt = 0;
  std::uint64_t detected_t1 = 0, detected_t1_npt = 0, detected_t1_ppt = 0;
  std::uint64_t detected_t2 = 0, detected_t2_npt = 0, detected_t2_ppt = 0;
};

Outcome oracle_soundness(json& report, OracleStats& s22, OracleStats& s23) {
  Outcome o;
  json per_criterion = json::object();
  for (const auto& name : {"corollary1", "result3", "result4"}) per_criterion[name] = {{"flagged", 0}, {"violations", 0}};
  json first = json::object();

  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}}) {
    auto& stats = dims[1] == 2 ? s22 : s23;
    for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
      const auto rho = generic_state(dims, seed);
      const auto oracle = ppt_oracle(rho);
      const bool npt = oracle.min_pt_eigenvalue < -kPptTolerance;
      ++stats.states;
      stats.npt += npt;

      for (const auto& name : {"corollary1", "result3", "result4"}) {
        if (run_criterion(name, rho).verdict != Verdict::Entangled) continue;
        per_criterion[name]["flagged"] = per_criterion[name]["flagged"].get<int>() + 1;
        if (!npt) {
          per_criterion[name]["violations"] = per_criterion[name]["violations"].get<int>() + 1;
          if (!first.contains(name))
            first[name] = {{"dims", dims_label(dims)}, {"seed", seed},
                           {"min_pt_eigenvalue", oracle.min_pt_eigenvalue}};
        }
      }

      auto tally = [&](Verdict v, std::uint64_t& det, std::uint64_t& det_npt, std::uint64_t& det_ppt) {
        if (v != Verdict::Entangled) return;
        ++det;
        (npt ? det_npt : det_ppt)++;
      };
      if (dims[1] == 2)
        tally(theorem1_check(rho).verdict, stats.detected_t1, stats.detected_t1_npt, stats.detected_t1_ppt);
      tally(theorem2_check(rho).verdict, stats.detected_t2, stats.detected_t2_npt, stats.detected_t2_ppt);
    }
  }

  for (const auto& name : {"corollary1", "result3", "result4"}) {
    const int v = per_criterion[name]["violations"];
    o.require(v == 0, std::string(name) + " flagged a PPT state");
    o.detail << name << " " << v << "/" << per_criterion[name]["flagged"].get<int>() << " PPT among flagged; ";
  }
  report["oracle_soundness"] = {{"states_per_dims", kCorpusSize},
                                {"per_criterion", per_criterion},
                                {"first_violation", first}};
  return o;
}

Outcome separable_immunity(json& report) {
  Outcome o;
  json by_dims = json::object();
  json first = json::object();
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{2, 4}}) {
    json counts = {{"bound_violations", 0}, {"corollary1", 0}, {"result3", 0}, {"result4", 0},
                   {"theorem1", 0}, {"theorem2", 0}, {"ppt_failures", 0}};
    for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
      const auto rho = separable_state(dims, seed);
      if (l1_coherence(rho).value > theorem3_bound(rho)) {
        counts["bound_violations"] = counts["bound_violations"].get<int>() + 1;
        if (!first.contains("bound"))
          first["bound"] = {{"dims", dims_label(dims)}, {"seed", seed},
                            {"coherence", l1_coherence(rho).value}, {"bound", theorem3_bound(rho)}};
      }
      for (const auto& name : {"corollary1", "result3", "result4"}) {
        if (run_criterion(name, rho).verdict == Verdict::Entangled) {
          counts[name] = counts[name].get<int>() + 1;
          if (!first.contains(name)) first[name] = {{"dims", dims_label(dims)}, {"seed", seed}};
        }
      }
      if (dims[1] == 2 && theorem1_check(rho).verdict == Verdict::Entangled)
        counts["theorem1"] = counts["theorem1"].get<int>() + 1;
      if (theorem2_check(rho).verdict == Verdict::Entangled)
        counts["theorem2"] = counts["theorem2"].get<int>() + 1;
      if (!ppt_oracle(rho).is_ppt) counts["ppt_failures"] = counts["ppt_failures"].get<int>() + 1;
    }
    for (const auto& key : {"bound_violations", "corollary1", "result3", "result4"})
      o.require(counts[key].get<int>() == 0, std::string(key) + " on " + dims_label(dims));
    o.detail << dims_label(dims) << ": bound " << counts["bound_violations"].get<int>() << ", corollary1 "
             << counts["corollary1"].get<int>() << ", result3 " << counts["result3"].get<int>()
             << ", result4 " << counts["result4"].get<int>() << "; ";
    by_dims[dims_label(dims)] = counts;
  }

  int tripartite_flags = 0, any_bipartition_flags = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const auto ens = product_ensemble(seed);
    if (corollary2_check(ens).verdict == Verdict::Entangled) {
      ++tripartite_flags;
      if (!first.contains("corollary2")) first["corollary2"] = {{"seed", seed}};
    }
    for (const auto& r : all_bipartitions_check(ens).reports)
      if (r.verdict == Verdict::Entangled) {
        ++any_bipartition_flags;
        break;
      }
  }
  o.require(tripartite_flags == 0, "corollary2 on three-qubit product ensembles");
  o.detail << "2x2x2 corollary2: " << tripartite_flags << "/" << kCorpusSize;
  by_dims["2x2x2"] = {{"corollary2", tripartite_flags}, {"corollary2_any_bipartition", any_bipartition_flags}};
  report["separable_immunity"] = {{"samples_per_dims", kCorpusSize}, {"counts", by_dims},
                                  {"first_violation", first}};
  return o;
}

Outcome empirical_report(json& report, const OracleStats& s22, const OracleStats& s23,
                         bool examples_pass, const std::string& path) {
  Outcome o;
  auto rate = [](std::uint64_t a, std::uint64_t b) { return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b); };
  auto block = [&](const OracleStats& s, bool with_t1) {
    json j;
    j["states"] = s.states;
    j["oracle_entangled"] = s.npt;
    const std::uint64_t ppt = s.states - s.npt;
    if (with_t1) {
      j["theorem1"] = {{"detected", s.detected_t1},
                       {"detection_rate", rate(s.detected_t1_npt, s.npt)},
                       {"ppt_flagged_rate", rate(s.detected_t1_ppt, ppt)}};
    }
    j["theorem2"] = {{"detected", s.detected_t2},
                     {"detection_rate", rate(s.detected_t2_npt, s.npt)},
                     {"ppt_flagged_rate", rate(s.detected_t2_ppt, ppt)}};
    return j;
  };
  report["theorem1_theorem2_rates"] = {{"2x2", block(s22, true)}, {"2x3", block(s23, false)}};

  bool written = false;
  try {
    io::write_file(path, report.dump(2) + "\n");
    written = true;
  } catch (const Error&) {
  }
  o.require(written, "could not write " + path);
  o.require(examples_pass, "worked examples (criteria 1-5) do not all match");
  const auto& r22 = report["theorem1_theorem2_rates"]["2x2"];
  o.detail << "report " << path << "; 2x2 theorem1 detection "
           << num(r22["theorem1"]["detection_rate"].get<double>()) << ", PPT-flagged "
           << num(r22["theorem1"]["ppt_flagged_rate"].get<double>());
  return o;
}

//------------------------------------------------------------------------------
// Criteria 9-10: algebra and kernels
//------------------------------------------------------------------------------

Outcome ggm_algebra() {
  Outcome o;
  for (std::size_t d : {2, 3, 4}) {
    const auto b = build_basis(d);
    const std::size_t pairs = d * (d - 1) / 2;
    o.require(b.symmetric.size() == pairs && b.antisymmetric.size() == pairs && b.diagonal.size() == d - 1,
              "counts at d=" + std::to_string(d));
    std::vector<const ComplexMatrix*> off;
    for (const auto* family : {&b.symmetric, &b.antisymmetric, &b.diagonal})
      for (const auto& e : *family) {
        o.require(hermiticity_defect(e.matrix) == 0.0, "Hermitian at d=" + std::to_string(d));
        o.require(trace(e.matrix) == complex{0.0}, "traceless at d=" + std::to_string(d));
        if (e.kind != GgmKind::Diagonal) off.push_back(&e.matrix);
      }
    for (std::size_t x = 0; x < off.size(); ++x)
      for (std::size_t y = 0; y < off.size(); ++y)
        o.require(trace_product(*off[x], *off[y]) == complex{x == y ? 2.0 : 0.0},
                  "orthogonality at d=" + std::to_string(d));
    const auto s = symmetric_sum(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        o.require(s(r, c) == complex{r == c ? 0.0 : 1.0}, "J - I at d=" + std::to_string(d));
  }
  const auto b2 = build_basis(2);
  o.require(b2.symmetric[0].matrix == pauli_x(), "sigma_x");
  o.require(b2.antisymmetric[0].matrix == pauli_y(), "sigma_y");
  o.detail << "d = 2, 3, 4";
  return o;
}

Outcome kernel_checks() {
  Outcome o;
  std::mt19937 gen(20260101);
  double worst_eig = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = oracle::random_hermitian(2, gen);
    const auto expected = oracle::eig2(d[0][0].real(), d[0][1], d[1][1].real());
    const auto got = hermitian_eigenvalues(testing::from_dense(d));
    worst_eig = std::max({worst_eig, std::abs(got.eigenvalues[0] - expected[0]),
                          std::abs(got.eigenvalues[1] - expected[1])});
  }
  o.require(worst_eig <= 1e-10, "eigensolver vs closed form");

  const double r2 = std::sqrt(2.0);
  const ComplexMatrix expected_bc{{0.4, 0, 0.2, r2 / 5}, {0, 0, 0, 0}, {0.2, 0, 0.2, r2 / 5},
                                  {r2 / 5, 0, r2 / 5, 0.4}};
  const auto psi1 = family_ensemble("illustration2", {{"p", 1.0}}).terms().front().state;
  const double pt_err = max_abs_diff(partial_trace(psi1, {2, 2, 2}, {1, 2}), expected_bc);
  o.require(pt_err <= 1e-12, "partial trace of |psi1><psi1|");

  double worst_product = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t da = 2 + seed % 2, db = 2 + seed % 3;
    const auto a = random_density(da, 1 + seed % da, 9000 + seed);
    const auto b = random_density(db, 1 + seed % db, 19000 + seed);
    const double direct = l1_coherence(tensor_product(a.matrix(), b.matrix()));
    const double law = product_coherence(l1_coherence(a), l1_coherence(b));
    worst_product = std::max(worst_product, std::abs(direct - law));
  }
  o.require(worst_product <= 1e-10, "coherence product law");
  o.detail << "eig err " << num(worst_eig) << ", partial trace err " << num(pt_err)
           << ", product law err " << num(worst_product);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string report_path = argc > 1 ? argv[1] : "acceptance_report.json";
  json report;
  int failures = 0;

  auto print = [&](int id, const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail.str() << "\n";
    report["criteria"][std::to_string(id)] = {{"name", name}, {"pass", o.pass}, {"detail", o.detail.str()}};
    if (!o.pass) ++failures;
    std::cout.flush();
  };

  auto guarded = [](auto&& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      Outcome o;
      o.require(false, std::string("exception: ") + e.what());
      return o;
    }
  };

  const auto c1 = guarded(example2_regression);
  const auto c2 = guarded(illustration1_regression);
  const auto c3 = guarded(illustration2_regression);
  const auto c4 = guarded(illustration3_regression);
  const auto c5 = guarded(example1_threshold);
  print(1, "example2 theorem2 regression", c1);
  print(2, "illustration1 corollary2 regression", c2);
  print(3, "illustration2 corollary2 regression", c3);
  print(4, "illustration3 equality case", c4);
  print(5, "example1 theorem1 threshold", c5);

  OracleStats s22, s23;
  print(6, "oracle soundness of corollary1/result3/result4",
        guarded([&] { return oracle_soundness(report, s22, s23); }));
  print(7, "separable immunity", guarded([&] { return separable_immunity(report); }));
  const bool examples_pass = c1.pass && c2.pass && c3.pass && c4.pass && c5.pass;
  print(8, "theorem1/theorem2 empirical report",
        guarded([&] { return empirical_report(report, s22, s23, examples_pass, report_path); }));
  print(9, "GGM algebra", guarded(ggm_algebra));
  print(10, "kernel checks", guarded(kernel_checks));

  // Rewrite so the report also carries criteria 8-10.
  try {
    io::write_file(report_path, report.dump(2) + "\n");
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
  }

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
