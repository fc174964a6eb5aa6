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

#ifndef COHSEP_TESTS_TEST_HELPERS_HPP
#define COHSEP_TESTS_TEST_HELPERS_HPP

#include <cmath>
#include <vector>

#include "cohsep/cohsep.hpp"
#include "oracles.hpp"

namespace testing {

inline cohsep::ComplexMatrix from_dense(const oracle::Dense& d) {
  cohsep::ComplexMatrix m(d.size(), d[0].size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[0].size(); ++j) m(i, j) = d[i][j];
  return m;
}

inline oracle::Dense to_dense(const cohsep::ComplexMatrix& m) {
  oracle::Dense d = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

inline cohsep::DensityMatrix bell_phi_plus() {
  const double h = 0.5;
  return cohsep::validate({{h, 0, 0, h}, {0, 0, 0, 0}, {0, 0, 0, 0}, {h, 0, 0, h}}, {2, 2});
}

inline cohsep::DensityMatrix bell_phi_minus() {
  const double h = 0.5;
  return cohsep::validate({{h, 0, 0, -h}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-h, 0, 0, h}}, {2, 2});
}

inline cohsep::DensityMatrix maximally_mixed(cohsep::Dims dims) {
  const std::size_t n = cohsep::dims_product(dims);
  return cohsep::validate(cohsep::complex{1.0 / static_cast<double>(n)} *
                              cohsep::ComplexMatrix::identity(n),
                          std::move(dims));
}

/// p |phi+><phi+| + (1 - p) I/4
inline cohsep::DensityMatrix werner(double p) {
  const auto mix = cohsep::complex{p} * bell_phi_plus().matrix() +
                   cohsep::complex{(1 - p) / 4} * cohsep::ComplexMatrix::identity(4);
  return cohsep::validate(mix, {2, 2});
}

}  // namespace testing

#endif  // COHSEP_TESTS_TEST_HELPERS_HPP
