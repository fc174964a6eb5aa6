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

#ifndef COHSEP_BATCH_HPP
#define COHSEP_BATCH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cohsep/criteria.hpp"
#include "cohsep/families.hpp"
#include "cohsep/io.hpp"
#include "cohsep/tripartite.hpp"

namespace cohsep::batch {

using io::json;

enum class Format { Text, Json };

inline Format format_from_string(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  throw Error(ErrorKind::ParseError, "format must be 'text' or 'json'");
}

/// "%.12g"
inline std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Splits "a,b,c"; "all" expands to every bipartite criterion.
inline std::vector<std::string> parse_criteria(const std::string& list) {
  if (list == "all") return bipartite_criteria();
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty criteria list");
  return out;
}

//------------------------------------------------------------------------------
// analyze
//------------------------------------------------------------------------------

/// One report per criterion; criteria that do not apply to the state's dims
/// are recorded inline rather than aborting the run.
inline json analyze_state(const DensityMatrix& rho, const std::vector<std::string>& criteria,
                          const std::string& name = "") {
  json doc;
  doc["input"] = {{"name", name}, {"dims", rho.dims()}};
  json reports = json::array();
  for (const auto& c : criteria) {
    try {
      reports.push_back(io::to_json(run_criterion(c, rho)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ShapeError && e.kind() != ErrorKind::QubitNotFirst) throw;
      reports.push_back({{"criterion", c},
                         {"error", to_string(ErrorKind::UnsupportedDims)},
                         {"message", e.what()}});
    }
  }
  doc["reports"] = std::move(reports);
  const auto& dims = rho.dims();
  if (dims.size() == 2 && dims[0] == 2 && (dims[1] == 2 || dims[1] == 3)) {
    doc["ppt_oracle"] = io::to_json(ppt_oracle(rho));
  }
  return doc;
}

inline std::string render_analysis(const json& doc, Format format) {
  if (format == Format::Json) return doc.dump(2) + "\n";
  std::ostringstream out;
  const auto& input = doc["input"];
  out << "state " << (input["name"].get<std::string>().empty() ? "-" : input["name"].get<std::string>())
      << " dims " << input["dims"].dump() << "\n";
  for (const auto& r : doc["reports"]) {
    out << "  " << r["criterion"].get<std::string>() << ": ";
    if (r.contains("error")) {
      out << r["error"].get<std::string>() << " (" << r["message"].get<std::string>() << ")\n";
      continue;
    }
    out << r["verdict"].get<std::string>() << "  lhs=" << format_g12(r["lhs"].get<double>())
        << " rhs=" << format_g12(r["rhs"].get<double>())
        << " margin=" << format_g12(r["margin"].get<double>()) << "\n";
  }
  if (doc.contains("ppt_oracle")) {
    const auto& o = doc["ppt_oracle"];
    out << "  ppt_oracle: " << (o["is_ppt"].get<bool>() ? "PPT" : "NPT")
        << "  min_pt_eigenvalue=" << format_g12(o["min_pt_eigenvalue"].get<double>()) << "\n";
  }
  return out.str();
}

inline std::string analyze(const std::string& state_path, const std::vector<std::string>& criteria,
                           Format format) {
  const auto file = io::load_state(state_path);
  const std::string name = file.metadata ? file.metadata->name : "";
  return render_analysis(analyze_state(file.state, criteria, name), format);
}

//------------------------------------------------------------------------------
// ensemble
//------------------------------------------------------------------------------

inline json analyze_ensemble_doc(const TripartiteEnsemble& ens, bool all_bipartitions) {
  json doc;
  doc["input"] = {{"dims", ens.dims()},
                  {"singled_out", std::string(1, to_char(ens.singled_out()))},
                  {"terms", ens.terms().size()},
                  {"admission", io::to_string(ens.admission())}};
  json reports = json::array();
  json skipped = json::array();
  if (all_bipartitions) {
    const auto sweep = all_bipartitions_check(ens);
    for (const auto& r : sweep.reports) reports.push_back(io::to_json(r));
    for (const auto& s : sweep.skipped)
      skipped.push_back({{"singled_out", std::string(1, to_char(s.singled_out))},
                         {"reason", s.reason}});
  } else {
    try {
      reports.push_back(io::to_json(corollary2_check(ens)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoQubitInPair) throw;
      skipped.push_back({{"singled_out", std::string(1, to_char(ens.singled_out()))},
                         {"reason", e.what()}});
    }
  }
  doc["reports"] = std::move(reports);
  doc["skipped"] = std::move(skipped);
  return doc;
}

inline std::string render_ensemble(const json& doc, Format format) {
  if (format == Format::Json) return doc.dump(2) + "\n";
  std::ostringstream out;
  out << "ensemble dims " << doc["input"]["dims"].dump() << " terms "
      << doc["input"]["terms"].get<std::size_t>() << "\n";
  for (const auto& r : doc["reports"]) {
    out << "  corollary2 " << r["singled_out"].get<std::string>() << "|"
        << r["pair"].get<std::string>() << ": " << r["verdict"].get<std::string>()
        << "  lhs=" << format_g12(r["lhs"].get<double>())
        << " rhs=" << format_g12(r["rhs"].get<double>())
        << " margin=" << format_g12(r["margin"].get<double>()) << "\n";
  }
  for (const auto& s : doc["skipped"]) {
    out << "  skipped " << s["singled_out"].get<std::string>() << ": "
        << s["reason"].get<std::string>() << "\n";
  }
  return out.str();
}

inline std::string analyze_ensemble(const std::string& path, bool all_bipartitions, Format format) {
  return render_ensemble(analyze_ensemble_doc(io::load_ensemble(path), all_bipartitions), format);
}

//------------------------------------------------------------------------------
// scan
//------------------------------------------------------------------------------

struct SweepSpec {
  std::string family;
  /// Parameters set to the grid value at each point (e.g. {"c", "f"}).
  std::vector<std::string> parameters;
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  std::vector<std::string> criteria;
  Params fixed;
};

/// Parses "start:stop:step".
inline void parse_range(const std::string& text, SweepSpec& spec) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad range component '" + item + "'");
    }
  }
  if (parts.size() != 3) throw Error(ErrorKind::ParseError, "range must be start:stop:step");
  spec.start = parts[0];
  spec.stop = parts[1];
  spec.step = parts[2];
}

inline std::vector<double> grid_points(const SweepSpec& spec) {
  if (!(spec.step > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "scan step must be > 0");
  if (spec.start > spec.stop) throw Error(ErrorKind::ParamOutOfRange, "scan start > stop");
  const auto count = static_cast<std::size_t>(std::floor((spec.stop - spec.start) / spec.step + 1e-9)) + 1;
  std::vector<double> points(count);
  for (std::size_t i = 0; i < count; ++i)
    points[i] = std::min(spec.start + static_cast<double>(i) * spec.step, spec.stop);
  return points;
}

struct ScanRow {
  double param;
  std::string criterion;
  double lhs, rhs, margin;
  Verdict verdict;
};

inline std::vector<ScanRow> scan_rows(const SweepSpec& spec) {
  const auto& info = family_info(spec.family);
  if (spec.parameters.empty()) throw Error(ErrorKind::ParseError, "scan needs a parameter");
  if (spec.criteria.empty()) throw Error(ErrorKind::ParseError, "scan needs criteria");
  for (const auto& c : spec.criteria) {
    const bool tripartite = c == "corollary2";
    if (tripartite != info.has_ensemble) {
      throw Error(ErrorKind::UnsupportedDims,
                  "criterion '" + c + "' does not apply to family '" + spec.family + "'");
    }
    if (tripartite) continue;
    const auto& known = bipartite_criteria();
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw Error(ErrorKind::ParseError, "unknown criterion '" + c + "'");
    }
    if (c == "theorem1" && info.dims != Dims{2, 2}) {
      throw Error(ErrorKind::UnsupportedDims, "theorem1 needs a 2x2 family");
    }
  }

  const auto points = grid_points(spec);
  // Reject the whole scan before computing anything if any point is out of range.
  for (double v : points) {
    Params p = spec.fixed;
    for (const auto& name : spec.parameters) p[name] = v;
    resolve_params(info, p);
  }

  std::vector<ScanRow> rows;
  rows.reserve(points.size() * spec.criteria.size());
  for (double v : points) {
    Params p = spec.fixed;
    for (const auto& name : spec.parameters) p[name] = v;
    if (info.has_ensemble) {
      const auto ens = family_ensemble(spec.family, p);
      const auto r = corollary2_check(ens);
      for (const auto& c : spec.criteria) rows.push_back({v, c, r.lhs, r.rhs, r.margin, r.verdict});
    } else {
      const auto rho = family_build(spec.family, p);
      for (const auto& c : spec.criteria) {
        const auto r = run_criterion(c, rho);
        rows.push_back({v, c, r.lhs, r.rhs, r.margin, r.verdict});
      }
    }
  }
  return rows;
}

inline std::string scan_csv(const SweepSpec& spec) {
  std::string out = "param,criterion,lhs,rhs,margin,verdict\n";
  for (const auto& r : scan_rows(spec)) {
    out += format_g12(r.param) + "," + r.criterion + "," + format_g12(r.lhs) + "," +
           format_g12(r.rhs) + "," + format_g12(r.margin) + "," + std::string(to_string(r.verdict)) +
           "\n";
  }
  return out;
}

//------------------------------------------------------------------------------
// ggm, random, family
//------------------------------------------------------------------------------

inline std::string emit_ggm(std::size_t d,
                            DiagonalNormalization normalization = DiagonalNormalization::Unsquared) {
  return io::to_json(build_basis(d, normalization)).dump(2) + "\n";
}

/// "2x3" -> {2, 3}
inline Dims parse_dims(const std::string& text) {
  Dims dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, 'x')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      dims.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadDimension, "bad dims '" + text + "'");
    }
  }
  if (dims.empty() || dims.size() > 3) throw Error(ErrorKind::BadDimension, "bad dims '" + text + "'");
  dims_product(dims);
  return dims;
}

struct RandomRequest {
  std::string kind = "generic";  // generic | pure | separable
  Dims dims;
  std::uint64_t seed = 0;
  std::size_t rank = 0;   // generic only; 0 = full rank
  std::size_t terms = 2;  // separable only
};

inline DensityMatrix gen_random_state(const RandomRequest& req) {
  const std::size_t dim = dims_product(req.dims);
  if (req.kind == "generic") return random_density(req.dims, req.rank == 0 ? dim : req.rank, req.seed);
  if (req.kind == "pure") return random_density(req.dims, 1, req.seed);
  if (req.kind == "separable") {
    if (req.dims.size() != 2) throw Error(ErrorKind::BadDimension, "separable needs AxB dims");
    return random_separable(req.dims, req.terms, req.seed);
  }
  throw Error(ErrorKind::ParseError, "kind must be generic, pure or separable");
}

inline std::string gen_random(const RandomRequest& req) {
  const auto rho = gen_random_state(req);
  std::string source = "random --kind " + req.kind + " --dims " + dims_label(req.dims) +
                       " --seed " + std::to_string(req.seed);
  if (req.kind == "generic" && req.rank != 0) source += " --rank " + std::to_string(req.rank);
  if (req.kind == "separable") source += " --terms " + std::to_string(req.terms);
  source += " (rng v" + std::to_string(Rng::kRngVersion) + ")";
  return io::write_state(rho, io::StateMetadata{"random-" + req.kind, source});
}

/// A family as a StateFile, or as an EnsembleFile when `as_ensemble` is set.
inline std::string emit_family(const std::string& name, const Params& params, bool as_ensemble) {
  if (as_ensemble) return io::write_ensemble(family_ensemble(name, params));
  std::string source = "family " + name;
  for (const auto& [k, v] : resolve_params(family_info(name), params))
    source += " " + k + "=" + format_g12(v);
  return io::write_state(family_build(name, params), io::StateMetadata{name, source});
}

}  // namespace cohsep::batch

#endif  // COHSEP_BATCH_HPP
