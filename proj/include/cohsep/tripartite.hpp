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

#ifndef COHSEP_TRIPARTITE_HPP
#define COHSEP_TRIPARTITE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohsep/coherence.hpp"
#include "cohsep/criteria.hpp"
#include "cohsep/states.hpp"

namespace cohsep {

enum class Party : std::size_t { A = 0, B = 1, C = 2 };

inline char to_char(Party p) { return "ABC"[static_cast<std::size_t>(p)]; }

inline Party party_from_char(char c) {
  switch (c) {
    case 'A': return Party::A;
    case 'B': return Party::B;
    case 'C': return Party::C;
    default: throw Error(ErrorKind::ParseError, std::string("unknown party '") + c + "'");
  }
}

/// How strictly ensemble terms are admitted.
///   Strict:         every term and the mixture must be valid states.
///   AllowNonPsd:    Hermitian and unit trace are still required, but PSD
///                   failures are recorded in psd_deficit instead of thrown.
enum class Admission { Strict, AllowNonPsd };

struct EnsembleTerm {
  double weight = 0.0;
  ComplexMatrix state;
};

/// An explicit decomposition sum_i p_i rho_i over three subsystems.
class TripartiteEnsemble {
 public:
  static constexpr double kWeightTolerance = 1e-10;

  TripartiteEnsemble(Dims dims, std::vector<EnsembleTerm> terms, Party singled_out,
                     Admission admission = Admission::Strict)
      : dims_(std::move(dims)), terms_(std::move(terms)), singled_out_(singled_out),
        admission_(admission) {
    if (dims_.size() != 3) {
      throw Error(ErrorKind::BadEnsemble, "ensemble dims must have three entries");
    }
    if (terms_.empty()) throw Error(ErrorKind::BadEnsemble, "ensemble has no terms");
    const std::size_t n = dims_product(dims_);

    double total = 0.0;
    for (const auto& t : terms_) {
      if (!(t.weight > 0.0 && t.weight <= 1.0)) {
        throw Error(ErrorKind::BadEnsemble, "weight " + std::to_string(t.weight) +
                                                " outside (0, 1]");
      }
      total += t.weight;
      if (t.state.rows() != n || t.state.cols() != n) {
        throw Error(ErrorKind::ShapeError, "term shape does not match dims " + dims_label(dims_));
      }
      admit(t.state, "term");
    }
    if (std::abs(total - 1.0) > kWeightTolerance) {
      throw Error(ErrorKind::BadEnsemble, "weights sum to " + std::to_string(total));
    }

    mixture_ = ComplexMatrix(n, n);
    for (const auto& t : terms_) mixture_ = mixture_ + complex{t.weight} * t.state;
    admit(mixture_, "mixture");
  }

  /// Convenience for already-validated terms.
  static TripartiteEnsemble from_states(const std::vector<std::pair<double, DensityMatrix>>& terms,
                                        Party singled_out) {
    if (terms.empty()) throw Error(ErrorKind::BadEnsemble, "ensemble has no terms");
    std::vector<EnsembleTerm> raw;
    for (const auto& [w, rho] : terms) raw.push_back({w, rho.matrix()});
    return TripartiteEnsemble(terms.front().second.dims(), std::move(raw), singled_out);
  }

  const Dims& dims() const noexcept { return dims_; }
  const std::vector<EnsembleTerm>& terms() const noexcept { return terms_; }
  Party singled_out() const noexcept { return singled_out_; }
  Admission admission() const noexcept { return admission_; }
  const ComplexMatrix& mixture() const noexcept { return mixture_; }
  /// Most negative eigenvalue seen among terms and mixture (0 when all PSD).
  double psd_deficit() const noexcept { return psd_deficit_; }

  TripartiteEnsemble with_singled_out(Party x) const {
    TripartiteEnsemble copy = *this;
    copy.singled_out_ = x;
    return copy;
  }

 private:
  void admit(const ComplexMatrix& m, const char* what) {
    auto violations = check_state(m, dims_);
    for (const auto& v : violations) {
      if (v.kind == ErrorKind::NotPSD && admission_ == Admission::AllowNonPsd) {
        psd_deficit_ = std::min(psd_deficit_, -v.magnitude);
        continue;
      }
      throw Error(v.kind, std::string(what) + ": " + describe(violations));
    }
  }

  Dims dims_;
  std::vector<EnsembleTerm> terms_;
  Party singled_out_;
  Admission admission_;
  ComplexMatrix mixture_;
  double psd_deficit_ = 0.0;
};

/// The two remaining parties, ordered cyclically (A -> BC, B -> CA, C -> AB)
/// and then swapped if needed so the qubit comes first.
struct PairLayout {
  Party x;
  std::array<std::size_t, 2> pair;  // subsystem indices, qubit first
  std::size_t qudit_dim;

  std::string label() const {
    return std::string{"ABC"[pair[0]], "ABC"[pair[1]]};
  }
};

inline PairLayout pair_layout(const Dims& dims, Party x) {
  const std::size_t xi = static_cast<std::size_t>(x);
  std::array<std::size_t, 2> pair = {(xi + 1) % 3, (xi + 2) % 3};
  if (dims[pair[0]] != 2 && dims[pair[1]] == 2) std::swap(pair[0], pair[1]);
  if (dims[pair[0]] != 2) {
    throw Error(ErrorKind::NoQubitInPair,
                std::string("pair for ") + to_char(x) + " has dims " +
                    std::to_string(dims[pair[0]]) + "x" + std::to_string(dims[pair[1]]) +
                    " with no qubit factor");
  }
  return {x, pair, dims[pair[1]]};
}

struct TermBreakdown {
  double weight = 0.0;
  double coherence_x = 0.0;  // C_l1 of the reduced state on x
  CoherenceBoundTerms pair;  // bound intermediates for the reduced pair state
  double summand = 0.0;      // weight * (c + bound * (1 + c))
};

struct TripartiteReport {
  Party singled_out = Party::A;
  std::string pair;
  std::size_t qudit_dim = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  double tolerance_used = kDetectionTolerance;
  std::vector<TermBreakdown> terms;
  std::vector<std::string> notes;
};

/// Reduced state of one term on the ordered pair, qubit first.
inline ComplexMatrix reduced_pair(const ComplexMatrix& term, const Dims& dims,
                                  const PairLayout& layout) {
  std::array<std::size_t, 2> kept = layout.pair;
  std::sort(kept.begin(), kept.end());
  ComplexMatrix reduced = partial_trace(term, dims, kept);
  if (kept[0] != layout.pair[0]) {
    const std::size_t kept_dims[2] = {dims[kept[0]], dims[kept[1]]};
    const std::size_t swap[2] = {1, 0};
    reduced = permute_subsystems(reduced, kept_dims, swap);
  }
  return reduced;
}

/// Right-hand side of the tripartite separable-state bound for the chosen x,
/// with a per-term breakdown whose summands add up to rhs.
inline TripartiteReport theorem4_rhs(const TripartiteEnsemble& ens, Party x) {
  const auto layout = pair_layout(ens.dims(), x);
  TripartiteReport report;
  report.singled_out = x;
  report.pair = layout.label();
  report.qudit_dim = layout.qudit_dim;

  const std::size_t x_index[1] = {static_cast<std::size_t>(x)};
  for (const auto& term : ens.terms()) {
    TermBreakdown b;
    b.weight = term.weight;
    b.coherence_x = l1_coherence(partial_trace(term.state, ens.dims(), x_index)).value;
    b.pair = coherence_bound_terms(reduced_pair(term.state, ens.dims(), layout));
    b.summand = b.weight * (b.coherence_x + b.pair.bound * (1.0 + b.coherence_x));
    report.rhs += b.summand;
    report.terms.push_back(b);
  }
  return report;
}

inline TripartiteReport theorem4_rhs(const TripartiteEnsemble& ens) {
  return theorem4_rhs(ens, ens.singled_out());
}

/// Detection by violation of the tripartite bound for one choice of x.
inline TripartiteReport corollary2_check(const TripartiteEnsemble& ens, Party x) {
  TripartiteReport report = theorem4_rhs(ens, x);
  report.lhs = l1_coherence(ens.mixture()).value;
  report.margin = report.lhs - report.rhs;
  report.verdict = report.margin > report.tolerance_used ? Verdict::Entangled
                                                         : Verdict::Inconclusive;
  if (ens.psd_deficit() < 0.0) {
    report.notes.push_back("ensemble admitted with non-PSD operators (min eigenvalue " +
                           std::to_string(ens.psd_deficit()) + ")");
  }
  return report;
}

inline TripartiteReport corollary2_check(const TripartiteEnsemble& ens) {
  return corollary2_check(ens, ens.singled_out());
}

struct SkippedBipartition {
  Party singled_out;
  std::string reason;
};

struct BipartitionSweep {
  std::vector<TripartiteReport> reports;
  std::vector<SkippedBipartition> skipped;
};

/// One report per x in {A, B, C} whose pair has a qubit factor and yields a
/// defined bound; the rest are listed as skipped with the reason. A pair
/// state with a negative block eigenvalue (possible for ensembles admitted
/// with AllowNonPsd) leaves the bound undefined for that x.
inline BipartitionSweep all_bipartitions_check(const TripartiteEnsemble& ens) {
  BipartitionSweep sweep;
  for (Party x : {Party::A, Party::B, Party::C}) {
    try {
      sweep.reports.push_back(corollary2_check(ens, x));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoQubitInPair && e.kind() != ErrorKind::NegativeEigenvalue &&
          e.kind() != ErrorKind::NegativeRadicand)
        throw;
      sweep.skipped.push_back({x, e.what()});
    }
  }
  return sweep;
}

}  // namespace cohsep

#endif  // COHSEP_TRIPARTITE_HPP
