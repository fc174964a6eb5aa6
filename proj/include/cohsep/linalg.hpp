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

#ifndef COHSEP_LINALG_HPP
#define COHSEP_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohsep/error.hpp"

namespace cohsep {

using complex = std::complex<double>;

/// Largest row or column count any matrix may have.
inline constexpr std::size_t kMaxDimension = 4096;

/// Tolerance for max |m - m^dagger| when a matrix must be Hermitian.
inline constexpr double kHermitianTolerance = 1e-9;

//------------------------------------------------------------------------------
// ComplexMatrix
//------------------------------------------------------------------------------

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(rows * cols, complex{0.0, 0.0});
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_shape(rows, cols);
    if (data_.size() != rows * cols) {
      throw Error(ErrorKind::ShapeError,
                  "entry count " + std::to_string(data_.size()) + " != " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const auto& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorKind::ShapeError, "matrix entries must be finite");
      }
    }
  }

  /// Row-by-row literal, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    check_shape(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorKind::ShapeError, "ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const complex> entries() const noexcept { return data_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  static void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorKind::ShapeError, "matrix dimensions must be positive");
    }
    if (rows > kMaxDimension || cols > kMaxDimension) {
      throw Error(ErrorKind::SizeError,
                  "dimension exceeds " + std::to_string(kMaxDimension));
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> data_;
};

//------------------------------------------------------------------------------
// Elementwise and algebraic helpers
//------------------------------------------------------------------------------

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorKind::ShapeError, std::string(what) + " requires a square matrix");
  }
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

inline ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeError, "matrix sum of mismatched shapes");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeError, "matrix difference of mismatched shapes");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline ComplexMatrix operator*(complex s, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeError, "matrix product of incompatible shapes");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline complex trace(const ComplexMatrix& m) {
  require_square(m, "trace");
  complex t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// max_ij |m_ij - conj(m_ji)|
inline double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity check");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance) {
  return m.is_square() && hermiticity_defect(m) <= tol;
}

/// max_ij |a_ij - b_ij|; shapes must agree.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeError, "comparison of mismatched shapes");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

/// Column vector as |v><v|.
inline ComplexMatrix projector(std::span<const complex> ket) {
  ComplexMatrix out(ket.size(), ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) out(i, j) = ket[i] * std::conj(ket[j]);
  return out;
}

/// The principal submatrix block rows [r0, r0+nr) x cols [c0, c0+nc).
inline ComplexMatrix submatrix(const ComplexMatrix& m, std::size_t r0, std::size_t c0,
                               std::size_t nr, std::size_t nc) {
  if (r0 + nr > m.rows() || c0 + nc > m.cols()) {
    throw Error(ErrorKind::ShapeError, "submatrix out of range");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

//------------------------------------------------------------------------------
// Tensor operations
//------------------------------------------------------------------------------

/// Kronecker product; block (i, j) of the result is a_ij * b.
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw Error(ErrorKind::SizeError, "tensor product " + std::to_string(rows) + "x" +
                                          std::to_string(cols) + " exceeds " +
                                          std::to_string(kMaxDimension));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline std::size_t dims_product(std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) throw Error(ErrorKind::ShapeError, "subsystem dimension must be positive");
    total *= d;
    if (total > kMaxDimension) throw Error(ErrorKind::SizeError, "subsystem dims too large");
  }
  return total;
}

namespace detail {

inline void check_dims(const ComplexMatrix& rho, std::span<const std::size_t> dims) {
  require_square(rho, "subsystem operation");
  if (dims.empty() || dims_product(dims) != rho.rows()) {
    throw Error(ErrorKind::ShapeError, "product of subsystem dims does not match matrix size " +
                                           std::to_string(rho.rows()));
  }
}

// Mixed-radix digits of a flat basis index, most significant subsystem first.
inline void unravel(std::size_t index, std::span<const std::size_t> dims,
                    std::span<std::size_t> digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

inline std::size_t ravel(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

}  // namespace detail

/// Reduced matrix over the subsystems listed in `keep` (in ascending subsystem order).
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
  detail::check_dims(rho, dims);
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  if (keep.empty()) throw Error(ErrorKind::ShapeError, "partial trace must keep a subsystem");
  for (auto k : keep) {
    if (k >= n) throw Error(ErrorKind::ShapeError, "kept subsystem index out of range");
    if (kept[k]) throw Error(ErrorKind::ShapeError, "kept subsystem listed twice");
    kept[k] = true;
  }

  std::vector<std::size_t> kept_dims;
  std::vector<std::size_t> traced_dims;
  for (std::size_t k = 0; k < n; ++k) (kept[k] ? kept_dims : traced_dims).push_back(dims[k]);
  const std::size_t kept_size = dims_product(kept_dims);
  const std::size_t traced_size = traced_dims.empty() ? 1 : dims_product(traced_dims);

  // Flat index of (kept digits, traced digits) in the full space.
  std::vector<std::size_t> full(n), kd(kept_dims.size()), td(traced_dims.size());
  auto compose = [&](std::size_t kept_index, std::size_t traced_index) {
    detail::unravel(kept_index, kept_dims, kd);
    if (!traced_dims.empty()) detail::unravel(traced_index, traced_dims, td);
    std::size_t ki = 0, ti = 0;
    for (std::size_t k = 0; k < n; ++k) full[k] = kept[k] ? kd[ki++] : td[ti++];
    return detail::ravel(full, dims);
  };

  std::vector<std::size_t> index_map(kept_size * traced_size);
  for (std::size_t a = 0; a < kept_size; ++a)
    for (std::size_t t = 0; t < traced_size; ++t) index_map[a * traced_size + t] = compose(a, t);

  ComplexMatrix out(kept_size, kept_size);
  for (std::size_t a = 0; a < kept_size; ++a)
    for (std::size_t b = 0; b < kept_size; ++b) {
      complex sum{};
      for (std::size_t t = 0; t < traced_size; ++t)
        sum += rho(index_map[a * traced_size + t], index_map[b * traced_size + t]);
      out(a, b) = sum;
    }
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& rho, std::initializer_list<std::size_t> dims,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

enum class Subsystem { A, B };

/// Transpose of one tensor factor of a bipartite dA x dB operator.
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a,
                                       std::size_t dim_b, Subsystem which) {
  const std::size_t dims[2] = {dim_a, dim_b};
  detail::check_dims(rho, dims);
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t k = 0; k < dim_a; ++k)
        for (std::size_t l = 0; l < dim_b; ++l) {
          const complex v = rho(i * dim_b + j, k * dim_b + l);
          if (which == Subsystem::B)
            out(i * dim_b + l, k * dim_b + j) = v;
          else
            out(k * dim_b + j, i * dim_b + l) = v;
        }
  return out;
}

//------------------------------------------------------------------------------
// Norms and traces
//------------------------------------------------------------------------------

/// Squared Frobenius norm, sum of |m_ij|^2.
inline double frobenius_norm_sq(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& z : m.entries()) sum += std::norm(z);
  return sum;
}

/// Tr(a b) as sum_ij a_ij b_ji, without forming the product.
inline complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeError, "trace_product of incompatible shapes");
  }
  complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * b(j, i);
  return sum;
}

//------------------------------------------------------------------------------
// Hermitian eigenvalues (cyclic complex Jacobi)
//------------------------------------------------------------------------------

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  bool converged = false;
  int sweeps_used = 0;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

namespace detail {

inline double off_diagonal_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p, q) with a unitary similarity: a diagonal phase on q makes the
// pivot real, then a real Givens rotation in the (p, q) plane removes it.
inline void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double magnitude = std::abs(a(p, q));
  if (magnitude == 0.0) return;

  const complex phase = a(p, q) / magnitude;  // e^{i phi}
  for (std::size_t k = 0; k < n; ++k) {
    a(k, q) *= std::conj(phase);
    a(q, k) *= phase;
  }

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * magnitude);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix. The stopping threshold on the
/// off-diagonal Frobenius mass is scaled by max(1, ||m||_F).
inline EigenResult hermitian_eigenvalues(const ComplexMatrix& m, JacobiOptions options = {}) {
  require_square(m, "hermitian_eigenvalues");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance) {
    throw Error(ErrorKind::NotHermitian, "max |m - m^dagger| = " + std::to_string(defect));
  }

  // Work on the exactly Hermitian part so rounding noise in the input cannot stall rotations.
  ComplexMatrix a = 0.5 * (m + adjoint(m));
  const std::size_t n = a.rows();
  const double threshold =
      options.off_diagonal_tolerance * std::max(1.0, std::sqrt(frobenius_norm_sq(a)));

  EigenResult result;
  while (detail::off_diagonal_mass(a) >= threshold) {
    if (result.sweeps_used >= options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, p, q);
    ++result.sweeps_used;
  }
  result.converged = detail::off_diagonal_mass(a) < threshold;

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a(i, i).real();
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

/// Smallest eigenvalue; throws NoConvergence rather than returning an estimate.
inline double min_eigenvalue(const ComplexMatrix& m) {
  auto result = hermitian_eigenvalues(m);
  if (!result.converged) {
    throw Error(ErrorKind::NoConvergence,
                "Jacobi did not converge in " + std::to_string(result.sweeps_used) + " sweeps");
  }
  return result.min();
}

//------------------------------------------------------------------------------
// Common single-qubit operators
//------------------------------------------------------------------------------

inline ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix pauli_y() { return {{0.0, complex{0, -1}}, {complex{0, 1}, 0.0}}; }
inline ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace cohsep

#endif  // COHSEP_LINALG_HPP
