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

#ifndef COHSEP_STATES_HPP
#define COHSEP_STATES_HPP

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cohsep/linalg.hpp"
#include "cohsep/random.hpp"

namespace cohsep {

inline constexpr double kTraceTolerance = 1e-9;
/// Smallest eigenvalue a state may have. Nothing is clamped.
inline constexpr double kPsdTolerance = -1e-10;

using Dims = std::vector<std::size_t>;

inline std::string dims_label(std::span<const std::size_t> dims) {
  std::string out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) out += "x";
    out += std::to_string(dims[k]);
  }
  return out;
}

//------------------------------------------------------------------------------
// Validation
//------------------------------------------------------------------------------

struct Violation {
  ErrorKind kind;
  double magnitude;  // how far outside the tolerance the candidate is
  std::string detail;
};

/// Every state invariant the candidate breaks; empty means it is a valid state.
/// Shape problems are thrown, not listed.
inline std::vector<Violation> check_state(const ComplexMatrix& candidate,
                                          std::span<const std::size_t> dims) {
  detail::check_dims(candidate, dims);
  std::vector<Violation> violations;

  const double defect = hermiticity_defect(candidate);
  if (defect > kHermitianTolerance) {
    violations.push_back({ErrorKind::NotHermitian, defect,
                          "max |m - m^dagger| = " + std::to_string(defect)});
  }

  const complex tr = trace(candidate);
  const double trace_error = std::abs(tr - complex{1.0, 0.0});
  if (trace_error > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "trace = " << tr.real() << (tr.imag() >= 0 ? "+" : "") << tr.imag() << "i";
    violations.push_back({ErrorKind::NotUnitTrace, trace_error, msg.str()});
  }

  // The spectrum is only meaningful once the matrix is Hermitian.
  if (defect <= kHermitianTolerance) {
    const double lowest = min_eigenvalue(candidate);
    if (lowest < kPsdTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "min eigenvalue = " << lowest;
      violations.push_back({ErrorKind::NotPSD, -lowest, msg.str()});
    }
  }
  return violations;
}

inline std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.kind)) + " (" + v.detail + ")";
  }
  return out;
}

//------------------------------------------------------------------------------
// DensityMatrix
//------------------------------------------------------------------------------

/// A validated state: Hermitian, unit trace, PSD, with subsystem dims.
/// Only obtainable through validate() and the operations below.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const complex& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  DensityMatrix(ComplexMatrix m, Dims dims) : matrix_(std::move(m)), dims_(std::move(dims)) {}

  friend DensityMatrix validate(ComplexMatrix candidate, Dims dims);
  friend DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                          std::span<const std::size_t> perm);

  ComplexMatrix matrix_;
  Dims dims_;
};

/// Promote a candidate matrix to a state, or throw naming the first broken
/// invariant (the message lists all of them with magnitudes).
inline DensityMatrix validate(ComplexMatrix candidate, Dims dims) {
  auto violations = check_state(candidate, dims);
  if (!violations.empty()) {
    throw Error(violations.front().kind, describe(violations));
  }
  return DensityMatrix(std::move(candidate), std::move(dims));
}

//------------------------------------------------------------------------------
// Block decomposition of qubit-first 2 x d operators
//------------------------------------------------------------------------------

/// [[p, q], [q^dagger, r]] with d x d blocks, qubit as the outer factor.
struct BlockDecomposition {
  ComplexMatrix p;
  ComplexMatrix q;
  ComplexMatrix r;

  std::size_t qudit_dim() const noexcept { return p.rows(); }
};

/// Splits a 2d x 2d operator. Assumes the caller has checked the shape.
inline BlockDecomposition split_blocks(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw Error(ErrorKind::ShapeError, "block split needs an even square matrix");
  }
  const std::size_t d = m.rows() / 2;
  return {submatrix(m, 0, 0, d, d), submatrix(m, 0, d, d, d), submatrix(m, d, d, d, d)};
}

inline void require_qubit_first(std::span<const std::size_t> dims) {
  if (dims.size() != 2) {
    throw Error(ErrorKind::ShapeError, "expected bipartite dims, got " + dims_label(dims));
  }
  if (dims[0] != 2) {
    throw Error(ErrorKind::QubitNotFirst,
                "dims " + dims_label(dims) + " must start with the qubit; permute first");
  }
}

inline BlockDecomposition block_decompose(const DensityMatrix& rho) {
  require_qubit_first(rho.dims());
  return split_blocks(rho.matrix());
}

inline ComplexMatrix reassemble(const BlockDecomposition& blocks) {
  const std::size_t d = blocks.qudit_dim();
  ComplexMatrix out(2 * d, 2 * d);
  const ComplexMatrix q_dagger = adjoint(blocks.q);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      out(i, j) = blocks.p(i, j);
      out(i, j + d) = blocks.q(i, j);
      out(i + d, j) = q_dagger(i, j);
      out(i + d, j + d) = blocks.r(i, j);
    }
  return out;
}

//------------------------------------------------------------------------------
// Subsystem permutation
//------------------------------------------------------------------------------

inline void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) {
    throw Error(ErrorKind::BadPermutation, "permutation length != subsystem count");
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw Error(ErrorKind::BadPermutation, "not a permutation");
    seen[p] = true;
  }
}

/// Output subsystem k is input subsystem perm[k].
inline ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                        std::span<const std::size_t> perm) {
  detail::check_dims(m, dims);
  const std::size_t n = dims.size();
  check_permutation(perm, n);

  Dims new_dims(n);
  for (std::size_t k = 0; k < n; ++k) new_dims[k] = dims[perm[k]];

  // old flat index -> new flat index
  const std::size_t size = m.rows();
  std::vector<std::size_t> relabel(size), old_digits(n), new_digits(n);
  for (std::size_t idx = 0; idx < size; ++idx) {
    detail::unravel(idx, dims, old_digits);
    for (std::size_t k = 0; k < n; ++k) new_digits[k] = old_digits[perm[k]];
    relabel[idx] = detail::ravel(new_digits, new_dims);
  }

  ComplexMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out(relabel[i], relabel[j]) = m(i, j);
  return out;
}

inline Dims permute_dims(std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  check_permutation(perm, dims.size());
  Dims out(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) out[k] = dims[perm[k]];
  return out;
}

inline DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                        std::span<const std::size_t> perm) {
  // A basis relabeling is a unitary similarity, so the result is still a state.
  return DensityMatrix(permute_subsystems(rho.matrix(), rho.dims(), perm),
                       permute_dims(rho.dims(), perm));
}

inline DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                        std::initializer_list<std::size_t> perm) {
  return permute_subsystems(rho, std::span<const std::size_t>(perm.begin(), perm.size()));
}

inline Dims inverse_permutation(std::span<const std::size_t> perm) {
  check_permutation(perm, perm.size());
  Dims inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  return inv;
}

//------------------------------------------------------------------------------
// Random states
//------------------------------------------------------------------------------

/// G G^dagger / Tr(G G^dagger) for a dim x rank complex Gaussian G drawn from rng.
inline ComplexMatrix random_density_matrix(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw Error(ErrorKind::BadRank, "rank " + std::to_string(rank) + " not in [1, " +
                                        std::to_string(dim) + "]");
  }
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < rank; ++k) g(i, k) = rng.complex_gaussian();

  double norm = 0.0;
  for (const auto& z : g.entries()) norm += std::norm(z);

  // Fill the upper triangle and mirror it so the result is exactly Hermitian.
  ComplexMatrix rho(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      complex sum{};
      for (std::size_t k = 0; k < rank; ++k) sum += g(i, k) * std::conj(g(j, k));
      rho(i, j) = sum / norm;
    }
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = 0; j < i; ++j) rho(i, j) = std::conj(rho(j, i));
  }
  return rho;
}

inline DensityMatrix random_density(Dims dims, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t dim = dims_product(dims);
  return validate(random_density_matrix(dim, rank, rng), std::move(dims));
}

inline DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  return random_density(Dims{dim}, rank, seed);
}

/// Factor rank of 0 draws each factor's rank uniformly from [1, dim].
struct SeparableOptions {
  std::size_t factor_rank = 0;
};

/// Sum_i p_i rhoA_i (x) rhoB_i with Dirichlet(1,...,1) weights.
inline DensityMatrix random_separable(Dims dims, std::size_t terms, std::uint64_t seed,
                                      SeparableOptions options = {}) {
  if (dims.size() != 2) {
    throw Error(ErrorKind::ShapeError, "random_separable needs bipartite dims");
  }
  if (terms < 1) throw Error(ErrorKind::BadRank, "random_separable needs at least one term");
  const std::size_t dim = dims_product(dims);
  Rng rng(seed);

  std::vector<double> weights(terms);
  for (auto& w : weights) w = rng.exponential();
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  auto pick_rank = [&](std::size_t d) {
    return options.factor_rank == 0 ? static_cast<std::size_t>(rng.integer(1, d))
                                    : options.factor_rank;
  };

  ComplexMatrix mix(dim, dim);
  for (std::size_t i = 0; i < terms; ++i) {
    const auto a = random_density_matrix(dims[0], pick_rank(dims[0]), rng);
    const auto b = random_density_matrix(dims[1], pick_rank(dims[1]), rng);
    mix = mix + complex{weights[i] / total} * tensor_product(a, b);
  }
  return validate(std::move(mix), std::move(dims));
}

}  // namespace cohsep

#endif  // COHSEP_STATES_HPP
