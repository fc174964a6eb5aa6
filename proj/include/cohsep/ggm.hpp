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

#ifndef COHSEP_GGM_HPP
#define COHSEP_GGM_HPP

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohsep/linalg.hpp"

namespace cohsep {

/// Prefactor on the diagonal family Lambda^l.
///   Unsquared: 2 / (l (l + 1)), the default.
///   Standard:  sqrt(2 / (l (l + 1))), which gives Tr(Lambda^l Lambda^l) = 2.
/// No criterion in this library uses the diagonal family.
enum class DiagonalNormalization { Unsquared, Standard };

enum class GgmKind { Symmetric, Antisymmetric, Diagonal };

inline std::string_view to_string(GgmKind kind) {
  switch (kind) {
    case GgmKind::Symmetric: return "symmetric";
    case GgmKind::Antisymmetric: return "antisymmetric";
    case GgmKind::Diagonal: return "diagonal";
  }
  return "unknown";
}

/// One basis element. Indices are 1-based: (j, k) with j < k for the
/// off-diagonal families, l in [1, d-1] for the diagonal family (k unused).
struct GgmElement {
  GgmKind kind;
  std::size_t j;
  std::size_t k;
  ComplexMatrix matrix;
};

struct GgmBasis {
  std::size_t dim = 0;
  DiagonalNormalization normalization = DiagonalNormalization::Unsquared;
  std::vector<GgmElement> symmetric;
  std::vector<GgmElement> antisymmetric;
  std::vector<GgmElement> diagonal;
  /// (j, k) -> position in `symmetric` / `antisymmetric`.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;

  std::size_t size() const { return symmetric.size() + antisymmetric.size() + diagonal.size(); }
};

inline GgmBasis build_basis(std::size_t d,
                            DiagonalNormalization normalization = DiagonalNormalization::Unsquared) {
  if (d < 2) throw Error(ErrorKind::BadDimension, "GGM basis needs d >= 2");
  if (d > kMaxDimension) throw Error(ErrorKind::SizeError, "GGM dimension too large");

  GgmBasis basis;
  basis.dim = d;
  basis.normalization = normalization;
  const complex i_unit{0.0, 1.0};

  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t k = j + 1; k <= d; ++k) {
      ComplexMatrix sym(d, d), anti(d, d);
      sym(j - 1, k - 1) = 1.0;
      sym(k - 1, j - 1) = 1.0;
      anti(j - 1, k - 1) = -i_unit;
      anti(k - 1, j - 1) = i_unit;
      basis.index[{j, k}] = basis.symmetric.size();
      basis.symmetric.push_back({GgmKind::Symmetric, j, k, std::move(sym)});
      basis.antisymmetric.push_back({GgmKind::Antisymmetric, j, k, std::move(anti)});
    }

  for (std::size_t l = 1; l < d; ++l) {
    const double ratio = 2.0 / static_cast<double>(l * (l + 1));
    const double coefficient =
        normalization == DiagonalNormalization::Standard ? std::sqrt(ratio) : ratio;
    ComplexMatrix diag(d, d);
    for (std::size_t j = 0; j < l; ++j) diag(j, j) = coefficient;
    diag(l, l) = -static_cast<double>(l) * coefficient;
    basis.diagonal.push_back({GgmKind::Diagonal, l, 0, std::move(diag)});
  }
  return basis;
}

/// Sum over j < k of the symmetric family: the all-ones matrix minus identity.
inline ComplexMatrix symmetric_sum(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::BadDimension, "symmetric_sum needs d >= 2");
  ComplexMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      if (j != k) out(j, k) = 1.0;
  return out;
}

}  // namespace cohsep

#endif  // COHSEP_GGM_HPP
