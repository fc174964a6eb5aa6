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

#ifndef COHSEP_COHERENCE_HPP
#define COHSEP_COHERENCE_HPP

#include <cmath>
#include <span>

#include "cohsep/states.hpp"

namespace cohsep {

/// l1-norm of coherence, always in the computational basis.
struct CoherenceValue {
  double value = 0.0;

  static constexpr const char* basis = "computational";

  operator double() const noexcept { return value; }
};

/// Sum of |m_ij| over i != j. Tiny magnitudes are summed as-is.
inline CoherenceValue l1_coherence(const ComplexMatrix& m) {
  require_square(m, "l1_coherence");
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) sum += std::abs(m(i, j));
  return {sum};
}

inline CoherenceValue l1_coherence(const DensityMatrix& rho) { return l1_coherence(rho.matrix()); }

/// Coherence of a product state from its factors: cA + cB (1 + cA).
inline CoherenceValue product_coherence(CoherenceValue a, CoherenceValue b) {
  if (a.value < 0.0 || b.value < 0.0) {
    throw Error(ErrorKind::ValidationError, "coherence values must be nonnegative");
  }
  return {a.value + b.value * (1.0 + a.value)};
}

/// Checks C(sum p_i rho_i) <= sum p_i C(rho_i) + 1e-10. Test utility.
inline bool convexity_check(std::span<const DensityMatrix> states, std::span<const double> weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw Error(ErrorKind::ShapeError, "convexity_check needs one weight per state");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error(ErrorKind::ValidationError, "weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error(ErrorKind::ValidationError, "weights must sum to 1");
  }

  const std::size_t n = states.front().dim();
  ComplexMatrix mix(n, n);
  double bound = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    mix = mix + complex{weights[i]} * states[i].matrix();
    bound += weights[i] * l1_coherence(states[i]).value;
  }
  return l1_coherence(mix).value <= bound + 1e-10;
}

}  // namespace cohsep

#endif  // COHSEP_COHERENCE_HPP
