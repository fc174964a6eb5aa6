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

#ifndef COHSEP_FAMILIES_HPP
#define COHSEP_FAMILIES_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cohsep/states.hpp"
#include "cohsep/tripartite.hpp"

namespace cohsep {

using Params = std::map<std::string, double>;

struct ParamSpec {
  std::string name;
  double min;
  double max;
  double default_value;
};

/// Built-in parameterised states.
///
///   example1       2x2 X-state with diagonal (a, b, d, e), coherences c at
///                  (2,3) and f at (1,4); needs a+b+d+e = 1, bd >= c^2, ae >= f^2.
///   example2       2x4 state with blocks M, N, O scaled by 1/(6a+1), a in [0, 1].
///   illustration1  p |0><0| (x) |phi+><phi+| + (1-p) |1><1| (x) |phi-><phi-|.
///   illustration2  p |psi1><psi1| + (1-p) |psi2><psi2| on three qubits.
///   illustration3  p M (x) (|00><00| + |11><11|)/2 + (1-p) |1><1| (x) (|01><01| + |10><10|)/2
///                  with M = |0><0| + |0><1| + |1><0|. M is not PSD, so this
///                  family is only available as an AllowNonPsd ensemble for p > 0.
struct FamilyInfo {
  std::string name;
  Dims dims;
  std::vector<ParamSpec> params;
  bool has_ensemble;
};

inline const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> registry = {
      {"example1",
       {2, 2},
       {{"a", 0, 1, 0.25}, {"b", 0, 1, 0.25}, {"c", -0.5, 0.5, 0.0},
        {"d", 0, 1, 0.25}, {"e", 0, 1, 0.25}, {"f", -0.5, 0.5, 0.0}},
       false},
      {"example2", {2, 4}, {{"a", 0, 1, 1.0}}, false},
      {"illustration1", {2, 2, 2}, {{"p", 0, 1, 0.5}}, true},
      {"illustration2", {2, 2, 2}, {{"p", 0, 1, 0.5}}, true},
      {"illustration3", {2, 2, 2}, {{"p", 0, 1, 0.5}}, true},
  };
  return registry;
}

inline const FamilyInfo& family_info(const std::string& name) {
  for (const auto& f : family_registry())
    if (f.name == name) return f;
  throw Error(ErrorKind::UnknownFamily, "no family named '" + name + "'");
}

/// Defaults merged with `params`; unknown names and out-of-range values throw.
inline Params resolve_params(const FamilyInfo& info, const Params& params) {
  Params out;
  for (const auto& spec : info.params) out[spec.name] = spec.default_value;
  for (const auto& [key, value] : params) {
    auto it = std::find_if(info.params.begin(), info.params.end(),
                           [&](const ParamSpec& s) { return s.name == key; });
    if (it == info.params.end()) {
      throw Error(ErrorKind::ParamOutOfRange, info.name + " has no parameter '" + key + "'");
    }
    if (!(value >= it->min && value <= it->max)) {
      throw Error(ErrorKind::ParamOutOfRange, info.name + ": " + key + " = " +
                                                  std::to_string(value) + " outside [" +
                                                  std::to_string(it->min) + ", " +
                                                  std::to_string(it->max) + "]");
    }
    out[key] = value;
  }
  return out;
}

namespace detail {

inline ComplexMatrix basis_projector(std::size_t dim, std::size_t index) {
  ComplexMatrix m(dim, dim);
  m(index, index) = 1.0;
  return m;
}

inline ComplexMatrix ket_projector(std::size_t dim,
                                   std::initializer_list<std::pair<std::size_t, complex>> amps) {
  std::vector<complex> ket(dim);
  for (const auto& [i, a] : amps) ket[i] = a;
  return projector(ket);
}

inline ComplexMatrix example1_matrix(const Params& p) {
  const double a = p.at("a"), b = p.at("b"), c = p.at("c");
  const double d = p.at("d"), e = p.at("e"), f = p.at("f");
  if (std::abs(a + b + d + e - 1.0) > kTraceTolerance) {
    throw Error(ErrorKind::ParamOutOfRange, "example1 needs a + b + d + e = 1");
  }
  // Equality is admitted; 1e-15 absorbs rounding in products like 0.25 * 0.25.
  if (b * d < c * c - 1e-15 || a * e < f * f - 1e-15) {
    throw Error(ErrorKind::ParamOutOfRange, "example1 needs bd >= |c|^2 and ae >= |f|^2");
  }
  return {{a, 0, 0, f}, {0, b, c, 0}, {0, c, d, 0}, {f, 0, 0, e}};
}

inline ComplexMatrix example2_matrix(const Params& p) {
  const double a = p.at("a");
  const double s = a / (6 * a + 1);
  const double t = (a + 1) / (6 * a + 1);
  ComplexMatrix m(8, 8);
  // M = diag(s, s, s, 0), N = diag(0, s, s, t)
  for (std::size_t i : {0, 1, 2}) m(i, i) = s;
  for (std::size_t i : {5, 6}) m(i, i) = s;
  m(7, 7) = t;
  // O has s at (1,4), (2,3), (3,2) in 1-based block coordinates.
  const std::pair<std::size_t, std::size_t> o_entries[] = {{0, 3}, {1, 2}, {2, 1}};
  for (const auto& [i, j] : o_entries) {
    m(i, 4 + j) = s;
    m(4 + j, i) = s;
  }
  return m;
}

inline std::vector<EnsembleTerm> illustration_terms(const std::string& name, double p) {
  const double r2 = std::sqrt(2.0);
  const double r5 = std::sqrt(5.0);
  ComplexMatrix first, second;
  if (name == "illustration1") {
    const double h = 1.0 / r2;
    first = tensor_product(basis_projector(2, 0), ket_projector(4, {{0, h}, {3, h}}));
    second = tensor_product(basis_projector(2, 1), ket_projector(4, {{0, h}, {3, -h}}));
  } else if (name == "illustration2") {
    first = ket_projector(8, {{0, 1 / r5}, {4, 1 / r5}, {6, 1 / r5}, {7, r2 / r5}});
    second = ket_projector(8, {{0, 1 / r5}, {4, 1 / r5}, {5, -1 / r5}, {6, r2 / r5}});
  } else if (name == "illustration3") {
    const ComplexMatrix m{{1.0, 1.0}, {1.0, 0.0}};
    const ComplexMatrix even = 0.5 * (basis_projector(4, 0) + basis_projector(4, 3));
    const ComplexMatrix odd = 0.5 * (basis_projector(4, 1) + basis_projector(4, 2));
    first = tensor_product(m, even);
    second = tensor_product(basis_projector(2, 1), odd);
  } else {
    throw Error(ErrorKind::UnknownFamily, "'" + name + "' has no ensemble form");
  }
  // Zero-weight terms contribute nothing to either side and are dropped.
  std::vector<EnsembleTerm> terms;
  if (p > 0.0) terms.push_back({p, std::move(first)});
  if (p < 1.0) terms.push_back({1.0 - p, std::move(second)});
  return terms;
}

}  // namespace detail

/// The family's matrix at `params`, not yet validated.
inline ComplexMatrix family_matrix(const std::string& name, const Params& params) {
  const auto& info = family_info(name);
  const Params p = resolve_params(info, params);
  if (name == "example1") return detail::example1_matrix(p);
  if (name == "example2") return detail::example2_matrix(p);
  ComplexMatrix mix(8, 8);
  for (const auto& t : detail::illustration_terms(name, p.at("p")))
    mix = mix + complex{t.weight} * t.state;
  return mix;
}

/// The family's state; throws if it is not a valid density matrix.
inline DensityMatrix family_build(const std::string& name, const Params& params = {}) {
  return validate(family_matrix(name, params), family_info(name).dims);
}

/// Two-term decomposition of an illustration family with x = A.
inline TripartiteEnsemble family_ensemble(const std::string& name, const Params& params = {}) {
  const auto& info = family_info(name);
  if (!info.has_ensemble) {
    throw Error(ErrorKind::UnknownFamily, "'" + name + "' has no ensemble form");
  }
  const Params p = resolve_params(info, params);
  const Admission admission =
      name == "illustration3" ? Admission::AllowNonPsd : Admission::Strict;
  return TripartiteEnsemble(info.dims, detail::illustration_terms(name, p.at("p")), Party::A,
                            admission);
}

}  // namespace cohsep

#endif  // COHSEP_FAMILIES_HPP
