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

#ifndef COHSEP_ERROR_HPP
#define COHSEP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohsep {

enum class ErrorKind {
  SizeError,
  ShapeError,
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NoConvergence,
  QubitNotFirst,
  BadPermutation,
  UnknownFamily,
  ParamOutOfRange,
  BadRank,
  BadDimension,
  NegativeEigenvalue,
  NoQubitInPair,
  NegativeRadicand,
  BadEnsemble,
  ParseError,
  ValidationError,
  UnsupportedDims,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeError: return "SizeError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::QubitNotFirst: return "QubitNotFirst";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::NoQubitInPair: return "NoQubitInPair";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::BadEnsemble: return "BadEnsemble";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnsupportedDims: return "UnsupportedDims";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cohsep

#endif  // COHSEP_ERROR_HPP
