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

#ifndef COHSEP_IO_HPP
#define COHSEP_IO_HPP

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohsep/criteria.hpp"
#include "cohsep/ggm.hpp"
#include "cohsep/states.hpp"
#include "cohsep/tripartite.hpp"

namespace cohsep::io {

using json = nlohmann::ordered_json;

inline constexpr double kKetNormTolerance = 1e-9;

//------------------------------------------------------------------------------
// Files
//------------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << contents;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

//------------------------------------------------------------------------------
// Matrix encoding: rows of [re, im] pairs
//------------------------------------------------------------------------------

inline json complex_to_json(complex z) { return json::array({z.real(), z.imag()}); }

inline complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorKind::ParseError, "complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw Error(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size(), cols = j[0].size();
  if (cols == 0) throw Error(ErrorKind::ParseError, "matrix rows must be non-empty");
  std::vector<complex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorKind::ParseError, "matrix rows must all have the same length");
    }
    for (const auto& z : row) entries.push_back(complex_from_json(z));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

inline std::vector<complex> ket_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "ket must be a non-empty array");
  std::vector<complex> ket;
  for (const auto& z : j) ket.push_back(complex_from_json(z));
  return ket;
}

inline Dims dims_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "dims must be a non-empty array");
  Dims dims;
  for (const auto& d : j) {
    if (!d.is_number_integer() || d.get<long long>() <= 0) {
      throw Error(ErrorKind::ParseError, "dims must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

/// Matrix rows are kept one per line so files stay diffable.
inline std::string dump_with_matrix_rows(const json& doc) {
  std::string out = "{\n";
  std::size_t field = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++field) {
    out += "  " + json(it.key()).dump() + ": ";
    if (it.key() == "matrix" && it->is_array()) {
      out += "[\n";
      for (std::size_t r = 0; r < it->size(); ++r) {
        out += "    " + (*it)[r].dump() + (r + 1 < it->size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += it->dump();
    }
    out += field + 1 < doc.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

//------------------------------------------------------------------------------
// StateFile
//------------------------------------------------------------------------------

struct StateMetadata {
  std::string name;
  std::string source;
};

struct StateFile {
  DensityMatrix state;
  std::optional<StateMetadata> metadata;
};

inline std::string write_state(const DensityMatrix& rho,
                               const std::optional<StateMetadata>& metadata = std::nullopt) {
  json doc;
  doc["dims"] = rho.dims();
  doc["matrix"] = matrix_to_json(rho.matrix());
  if (metadata) doc["metadata"] = {{"name", metadata->name}, {"source", metadata->source}};
  return dump_with_matrix_rows(doc);
}

/// Parses and validates. Broken state invariants raise ValidationError naming them.
inline StateFile parse_state(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    throw Error(ErrorKind::ParseError, "state file needs 'dims' and 'matrix'");
  }
  Dims dims = dims_from_json(doc["dims"]);
  ComplexMatrix m = matrix_from_json(doc["matrix"]);
  if (!m.is_square() || dims_product(dims) != m.rows()) {
    throw Error(ErrorKind::ValidationError,
                "ShapeError (dims " + dims_label(dims) + " do not match a " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix)");
  }
  auto violations = check_state(m, dims);
  if (!violations.empty()) throw Error(ErrorKind::ValidationError, describe(violations));

  StateFile file{validate(std::move(m), std::move(dims)), std::nullopt};
  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    const auto& md = doc["metadata"];
    file.metadata = StateMetadata{md.value("name", ""), md.value("source", "")};
  }
  return file;
}

inline StateFile load_state(const std::string& path) { return parse_state(read_file(path)); }

//------------------------------------------------------------------------------
// EnsembleFile
//------------------------------------------------------------------------------

inline std::string_view to_string(Admission a) {
  return a == Admission::Strict ? "strict" : "allow_non_psd";
}

inline Admission admission_from_string(const std::string& s) {
  if (s == "strict") return Admission::Strict;
  if (s == "allow_non_psd") return Admission::AllowNonPsd;
  throw Error(ErrorKind::ParseError, "admission must be 'strict' or 'allow_non_psd'");
}

/// Terms are written as explicit matrices; the optional "admission" field is
/// emitted only when it differs from strict.
inline std::string write_ensemble(const TripartiteEnsemble& ens) {
  std::string out = "{\n";
  out += "  \"dims\": " + json(ens.dims()).dump() + ",\n";
  out += "  \"singled_out\": " + json(std::string(1, to_char(ens.singled_out()))).dump() + ",\n";
  if (ens.admission() != Admission::Strict) {
    out += "  \"admission\": " + json(to_string(ens.admission())).dump() + ",\n";
  }
  out += "  \"terms\": [\n";
  const auto& terms = ens.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += "    {\"weight\": " + json(terms[i].weight).dump() + ", \"state\": [\n";
    const json rows = matrix_to_json(terms[i].state);
    for (std::size_t r = 0; r < rows.size(); ++r)
      out += "      " + rows[r].dump() + (r + 1 < rows.size() ? ",\n" : "\n");
    out += std::string("    ]}") + (i + 1 < terms.size() ? ",\n" : "\n");
  }
  out += "  ]\n}\n";
  return out;
}

inline TripartiteEnsemble parse_ensemble(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("terms")) {
    throw Error(ErrorKind::ParseError, "ensemble file needs 'dims' and 'terms'");
  }
  Dims dims = dims_from_json(doc["dims"]);
  if (dims.size() != 3) throw Error(ErrorKind::ParseError, "ensemble dims must have three entries");
  const std::string x = doc.value("singled_out", "A");
  if (x.size() != 1) throw Error(ErrorKind::ParseError, "singled_out must be A, B or C");
  const Admission admission = admission_from_string(doc.value("admission", "strict"));

  const std::size_t n = dims_product(dims);
  std::vector<EnsembleTerm> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("weight") || !t["weight"].is_number()) {
      throw Error(ErrorKind::ParseError, "each term needs a numeric 'weight'");
    }
    EnsembleTerm term;
    term.weight = t["weight"].get<double>();
    if (t.contains("ket")) {
      auto ket = ket_from_json(t["ket"]);
      if (ket.size() != n) throw Error(ErrorKind::ValidationError, "ket length does not match dims");
      double norm = 0.0;
      for (const auto& a : ket) norm += std::norm(a);
      if (std::abs(std::sqrt(norm) - 1.0) > kKetNormTolerance) {
        throw Error(ErrorKind::ValidationError,
                    "ket not normalized (norm = " + std::to_string(std::sqrt(norm)) + ")");
      }
      term.state = projector(ket);
    } else if (t.contains("state")) {
      term.state = matrix_from_json(t["state"]);
    } else {
      throw Error(ErrorKind::ParseError, "each term needs 'ket' or 'state'");
    }
    terms.push_back(std::move(term));
  }

  try {
    return TripartiteEnsemble(std::move(dims), std::move(terms), party_from_char(x[0]), admission);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

inline TripartiteEnsemble load_ensemble(const std::string& path) {
  return parse_ensemble(read_file(path));
}

//------------------------------------------------------------------------------
// Reports
//------------------------------------------------------------------------------

inline json to_json(const CriterionReport& r) {
  json j;
  j["criterion"] = r.criterion;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["verdict"] = to_string(r.verdict);
  j["tolerance"] = r.tolerance_used;
  j["notes"] = r.notes;
  return j;
}

inline json to_json(const PptVerdict& v) {
  return {{"min_pt_eigenvalue", v.min_pt_eigenvalue}, {"is_ppt", v.is_ppt}, {"exact", v.exact}};
}

inline json to_json(const CoherenceBoundTerms& t) {
  return {{"qudit_dim", t.qudit_dim},       {"p_norm_sq", t.p_norm_sq},
          {"r_norm_sq", t.r_norm_sq},       {"diag_sq_sum", t.diag_sq_sum},
          {"radicand", t.radicand},         {"lambda_min_p", t.lambda_min_p},
          {"lambda_min_r", t.lambda_min_r}, {"prefactor", t.prefactor},
          {"bound", t.bound}};
}

inline json to_json(const TripartiteReport& r) {
  json j;
  j["singled_out"] = std::string(1, to_char(r.singled_out));
  j["pair"] = r.pair;
  j["qudit_dim"] = r.qudit_dim;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["verdict"] = to_string(r.verdict);
  j["tolerance"] = r.tolerance_used;
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"weight", t.weight},
                     {"coherence_x", t.coherence_x},
                     {"pair_bound", to_json(t.pair)},
                     {"summand", t.summand}});
  }
  j["terms"] = std::move(terms);
  j["notes"] = r.notes;
  return j;
}

//------------------------------------------------------------------------------
// GGM export
//------------------------------------------------------------------------------

inline json to_json(const GgmBasis& basis) {
  json doc;
  doc["dim"] = basis.dim;
  doc["diagonal_normalization"] =
      basis.normalization == DiagonalNormalization::Standard ? "standard" : "unsquared";
  doc["counts"] = {{"symmetric", basis.symmetric.size()},
                   {"antisymmetric", basis.antisymmetric.size()},
                   {"diagonal", basis.diagonal.size()}};
  json matrices = json::array();
  auto emit = [&](const GgmElement& e) {
    json m;
    m["type"] = to_string(e.kind);
    if (e.kind == GgmKind::Diagonal) {
      m["l"] = e.j;
    } else {
      m["j"] = e.j;
      m["k"] = e.k;
    }
    m["matrix"] = matrix_to_json(e.matrix);
    matrices.push_back(std::move(m));
  };
  for (const auto& e : basis.symmetric) emit(e);
  for (const auto& e : basis.antisymmetric) emit(e);
  for (const auto& e : basis.diagonal) emit(e);
  doc["matrices"] = std::move(matrices);
  return doc;
}

}  // namespace cohsep::io

#endif  // COHSEP_IO_HPP
