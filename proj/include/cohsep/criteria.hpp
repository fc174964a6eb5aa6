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

#ifndef COHSEP_CRITERIA_HPP
#define COHSEP_CRITERIA_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cohsep/coherence.hpp"
#include "cohsep/ggm.hpp"
#include "cohsep/states.hpp"

namespace cohsep {

/// Dead-band on every strict inequality; |margin| <= tol never detects.
inline constexpr double kDetectionTolerance = 1e-10;
/// Negative eigenvalues and radicands in [-1e-10, 0) are treated as 0.
inline constexpr double kClampWindow = 1e-10;
inline constexpr double kPptTolerance = 1e-10;

enum class Verdict { Entangled, Inconclusive, SeparabilityConsistent };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Entangled: return "Entangled";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::SeparabilityConsistent: return "SeparabilityConsistent";
  }
  return "Unknown";
}

struct CriterionReport {
  std::string criterion;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  Verdict verdict = Verdict::Inconclusive;
  double tolerance_used = kDetectionTolerance;
  std::vector<std::string> notes;
};

struct PptVerdict {
  double min_pt_eigenvalue = 0.0;
  bool is_ppt = true;
  /// PPT is equivalent to separability only for 2x2 and 2x3.
  bool exact = false;
};

namespace detail {

enum class Strictness { Strict, NonStrict };

inline CriterionReport make_report(std::string name, double lhs, double rhs, Strictness strictness,
                                   Verdict otherwise) {
  CriterionReport report;
  report.criterion = std::move(name);
  report.lhs = lhs;
  report.rhs = rhs;
  report.margin = lhs - rhs;
  const bool fires = strictness == Strictness::Strict ? report.margin > report.tolerance_used
                                                      : report.margin >= report.tolerance_used;
  report.verdict = fires ? Verdict::Entangled : otherwise;
  return report;
}

inline double clamp_small_negative(double value, ErrorKind kind, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -kClampWindow) return 0.0;
  throw Error(kind, std::string(what) + " = " + std::to_string(value));
}

}  // namespace detail

//------------------------------------------------------------------------------
// Block-matrix criteria
//------------------------------------------------------------------------------

/// Detection: ||Q||^2 > Tr(P R) means entangled.
inline CriterionReport result3_check(const BlockDecomposition& blocks) {
  return detail::make_report("result3", frobenius_norm_sq(blocks.q),
                             trace_product(blocks.p, blocks.r).real(), detail::Strictness::Strict,
                             Verdict::Inconclusive);
}

inline CriterionReport result3_check(const DensityMatrix& rho) {
  return result3_check(block_decompose(rho));
}

/// Separability condition ||Q||^2 < lmin(P) lmin(R); a violation is reported
/// as Entangled.
inline CriterionReport result4_check(const BlockDecomposition& blocks) {
  const double rhs = min_eigenvalue(blocks.p) * min_eigenvalue(blocks.r);
  return detail::make_report("result4", frobenius_norm_sq(blocks.q), rhs,
                             detail::Strictness::NonStrict, Verdict::SeparabilityConsistent);
}

inline CriterionReport result4_check(const DensityMatrix& rho) {
  return result4_check(block_decompose(rho));
}

//------------------------------------------------------------------------------
// Coherence lower bounds (detection)
//------------------------------------------------------------------------------

/// Two qubits: C_l1 > Tr[(A + B) sigma_x + 2 A B] with A, B the diagonal blocks.
inline CriterionReport theorem1_check(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) {
    throw Error(ErrorKind::ShapeError, "theorem1 needs dims 2x2, got " + dims_label(rho.dims()));
  }
  const auto blocks = block_decompose(rho);
  const ComplexMatrix sx = pauli_x();
  const double rhs = trace_product(blocks.p + blocks.r, sx).real() +
                     2.0 * trace_product(blocks.p, blocks.r).real();
  return detail::make_report("theorem1", l1_coherence(rho).value, rhs, detail::Strictness::Strict,
                             Verdict::Inconclusive);
}

/// Qubit-qudit: C_l1 >= Tr[(P + R) sum_{j<k} Lambda_s^{jk}] + 2 Tr(P R).
inline CriterionReport theorem2_check(const DensityMatrix& rho) {
  const auto blocks = block_decompose(rho);
  const ComplexMatrix lambda_sum = symmetric_sum(blocks.qudit_dim());
  const double rhs = trace_product(blocks.p + blocks.r, lambda_sum).real() +
                     2.0 * trace_product(blocks.p, blocks.r).real();
  auto report = detail::make_report("theorem2", l1_coherence(rho).value, rhs,
                                    detail::Strictness::NonStrict, Verdict::Inconclusive);
  report.notes.push_back(
      "non-strict inequality (>=) evaluated with a tolerance dead-band; the derivation it rests "
      "on is strict");
  return report;
}

//------------------------------------------------------------------------------
// Coherence upper bound for separable qubit-qudit states
//------------------------------------------------------------------------------

/// Every intermediate of the separable-state coherence bound.
struct CoherenceBoundTerms {
  std::size_t qudit_dim = 0;
  double p_norm_sq = 0.0;
  double r_norm_sq = 0.0;
  double diag_sq_sum = 0.0;  // sum over all 2d diagonal entries of |rho_ii|^2
  double radicand = 0.0;     // p_norm_sq + r_norm_sq - diag_sq_sum, clamped
  double lambda_min_p = 0.0;
  double lambda_min_r = 0.0;
  double prefactor = 0.0;  // sqrt(2 d (d - 1))
  double bound = 0.0;
};

/// sqrt(2d(d-1)) [ (||P||^2 + ||R||^2 - sum_i |rho_ii|^2)^{1/2} + sqrt(lmin(P) lmin(R)) ]
/// for a qubit-first 2d x 2d operator.
inline CoherenceBoundTerms coherence_bound_terms(const ComplexMatrix& m) {
  const auto blocks = split_blocks(m);
  CoherenceBoundTerms t;
  t.qudit_dim = blocks.qudit_dim();
  t.p_norm_sq = frobenius_norm_sq(blocks.p);
  t.r_norm_sq = frobenius_norm_sq(blocks.r);
  for (std::size_t i = 0; i < m.rows(); ++i) t.diag_sq_sum += std::norm(m(i, i));
  t.radicand = detail::clamp_small_negative(t.p_norm_sq + t.r_norm_sq - t.diag_sq_sum,
                                            ErrorKind::NegativeRadicand, "block radicand");
  t.lambda_min_p = detail::clamp_small_negative(min_eigenvalue(blocks.p),
                                                ErrorKind::NegativeEigenvalue, "lambda_min(P)");
  t.lambda_min_r = detail::clamp_small_negative(min_eigenvalue(blocks.r),
                                                ErrorKind::NegativeEigenvalue, "lambda_min(R)");
  const auto d = static_cast<double>(t.qudit_dim);
  t.prefactor = std::sqrt(2.0 * d * (d - 1.0));
  t.bound = t.prefactor * (std::sqrt(t.radicand) + std::sqrt(t.lambda_min_p * t.lambda_min_r));
  return t;
}

inline double theorem3_bound(const DensityMatrix& rho) {
  require_qubit_first(rho.dims());
  return coherence_bound_terms(rho.matrix()).bound;
}

/// Detection via violation of the separable-state upper bound.
inline CriterionReport corollary1_check(const DensityMatrix& rho) {
  require_qubit_first(rho.dims());
  const auto terms = coherence_bound_terms(rho.matrix());
  auto report = detail::make_report("corollary1", l1_coherence(rho).value, terms.bound,
                                    detail::Strictness::Strict, Verdict::Inconclusive);
  report.notes.push_back("bound prefactor sqrt(2d(d-1)) = " + std::to_string(terms.prefactor) +
                         " applied as printed");
  return report;
}

//------------------------------------------------------------------------------
// Independent oracle and utilities
//------------------------------------------------------------------------------

/// Peres-Horodecki test with the transpose on the second factor.
inline PptVerdict ppt_oracle(const DensityMatrix& rho) {
  if (rho.dims().size() != 2) {
    throw Error(ErrorKind::ShapeError, "PPT oracle needs bipartite dims, got " +
                                           dims_label(rho.dims()));
  }
  const auto& dims = rho.dims();
  PptVerdict v;
  v.min_pt_eigenvalue =
      min_eigenvalue(partial_transpose(rho.matrix(), dims[0], dims[1], Subsystem::B));
  v.is_ppt = v.min_pt_eigenvalue >= -kPptTolerance;
  v.exact = dims[0] * dims[1] <= 6;
  return v;
}

/// sum |x_i| <= sqrt(n) (sum x_i^2)^{1/2} + 1e-12, the p = q = 2 Hoelder case.
inline bool holder_bound(std::span<const double> values) {
  double l1 = 0.0, l2sq = 0.0;
  for (double x : values) {
    l1 += std::abs(x);
    l2sq += x * x;
  }
  return l1 <= std::sqrt(static_cast<double>(values.size())) * std::sqrt(l2sq) + 1e-12;
}

//------------------------------------------------------------------------------
// Dispatch by name
//------------------------------------------------------------------------------

inline const std::vector<std::string>& bipartite_criteria() {
  static const std::vector<std::string> names = {"result3", "result4", "theorem1", "theorem2",
                                                 "corollary1"};
  return names;
}

/// Runs one bipartite criterion by name; shape problems surface as Error.
inline CriterionReport run_criterion(const std::string& name, const DensityMatrix& rho) {
  if (name == "result3") return result3_check(rho);
  if (name == "result4") return result4_check(rho);
  if (name == "theorem1") return theorem1_check(rho);
  if (name == "theorem2") return theorem2_check(rho);
  if (name == "corollary1") return corollary1_check(rho);
  throw Error(ErrorKind::ParseError, "unknown criterion '" + name + "'");
}

}  // namespace cohsep

#endif  // COHSEP_CRITERIA_HPP
