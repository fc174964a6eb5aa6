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

// Batch front end. Exit status reports tool failures only: a state that is
// Inconclusive or Entangled both exit 0.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cohsep/cohsep.hpp"

namespace {

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty() || out_path == "-") {
    std::cout << contents;
  } else {
    cohsep::io::write_file(out_path, contents);
  }
}

// "a=0.25,b=0.25" -> {{"a", 0.25}, {"b", 0.25}}
cohsep::Params parse_assignments(const std::string& text) {
  cohsep::Params params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw cohsep::Error(cohsep::ErrorKind::ParseError, "expected name=value, got '" + item + "'");
    }
    try {
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw cohsep::Error(cohsep::ErrorKind::ParseError, "bad value in '" + item + "'");
    }
  }
  return params;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cohsep;

  CLI::App app{"Coherence-based entanglement and separability checks for density matrices"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Run bipartite criteria on a state file");
  std::string state_path, criteria = "all", format = "text", out_path;
  analyze->add_option("--state", state_path, "StateFile JSON")->required();
  analyze->add_option("--criteria", criteria, "Comma list or 'all'");
  analyze->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--out", out_path, "Output path (default stdout)");

  // ensemble
  auto* ensemble = app.add_subcommand("ensemble", "Run the tripartite check on an ensemble file");
  std::string ensemble_path;
  bool all_bipartitions = false;
  ensemble->add_option("--file", ensemble_path, "EnsembleFile JSON")->required();
  ensemble->add_flag("--all-bipartitions", all_bipartitions, "Evaluate every x in {A, B, C}");
  ensemble->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  ensemble->add_option("--out", out_path, "Output path (default stdout)");

  // scan
  auto* scan = app.add_subcommand("scan", "Sweep a built-in family parameter and emit CSV");
  std::string family, param, range, scan_criteria, fixed;
  scan->add_option("--family", family, "Family name")->required();
  scan->add_option("--param", param, "Parameter(s) set to the grid value, e.g. c,f")->required();
  scan->add_option("--range", range, "start:stop:step")->required();
  scan->add_option("--criteria", scan_criteria, "Comma list")->required();
  scan->add_option("--set", fixed, "Fixed parameters, e.g. a=0.25,b=0.25");
  scan->add_option("--out", out_path, "CSV path (default stdout)");

  // ggm
  auto* ggm = app.add_subcommand("ggm", "Export the generalized Gell-Mann basis as JSON");
  std::size_t dim = 0;
  bool standard = false;
  ggm->add_option("--dim", dim, "Dimension d >= 2")->required();
  ggm->add_flag("--standard-diagonal", standard, "Use sqrt(2/(l(l+1))) on the diagonal family");
  ggm->add_option("--out", out_path, "Output path (default stdout)");

  // random
  auto* random = app.add_subcommand("random", "Write a seeded random state file");
  batch::RandomRequest request;
  std::string dims_text;
  random->add_option("--kind", request.kind, "generic | pure | separable")
      ->check(CLI::IsMember({"generic", "pure", "separable"}));
  random->add_option("--dims", dims_text, "AxB or AxBxC")->required();
  random->add_option("--seed", request.seed, "PRNG seed")->required();
  random->add_option("--rank", request.rank, "Rank for generic states (0 = full)");
  random->add_option("--terms", request.terms, "Product terms for separable states");
  random->add_option("--out", out_path, "Output path (default stdout)");

  // family
  auto* fam = app.add_subcommand("family", "Write a built-in family as a state or ensemble file");
  std::string family_name, family_params;
  bool as_ensemble = false;
  fam->add_option("--name", family_name, "Family name")->required();
  fam->add_option("--set", family_params, "Parameters, e.g. p=0.5");
  fam->add_flag("--ensemble", as_ensemble, "Emit the explicit decomposition");
  fam->add_option("--out", out_path, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      emit(out_path, batch::analyze(state_path, batch::parse_criteria(criteria),
                                    batch::format_from_string(format)));
    } else if (*ensemble) {
      emit(out_path, batch::analyze_ensemble(ensemble_path, all_bipartitions,
                                             batch::format_from_string(format)));
    } else if (*scan) {
      batch::SweepSpec spec;
      spec.family = family;
      spec.parameters = split_commas(param);
      batch::parse_range(range, spec);
      spec.criteria = split_commas(scan_criteria);
      spec.fixed = parse_assignments(fixed);
      emit(out_path, batch::scan_csv(spec));
    } else if (*ggm) {
      emit(out_path, batch::emit_ggm(dim, standard ? DiagonalNormalization::Standard
                                                   : DiagonalNormalization::Unsquared));
    } else if (*random) {
      request.dims = batch::parse_dims(dims_text);
      emit(out_path, batch::gen_random(request));
    } else if (*fam) {
      emit(out_path, batch::emit_family(family_name, parse_assignments(family_params), as_ensemble));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
