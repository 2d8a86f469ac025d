// Copyright 2026 The isolab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISOLAB_ERRORS_HPP
#define ISOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isolab {

/// Base for all recoverable isolab errors. Callers that want a single
/// catch point (the CLI maps these to exit code 2) catch this type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An input matrix failed the density-matrix invariants (hermiticity,
/// unit trace, positivity).
struct InvalidStateError : Error {
  using Error::Error;
};

/// A (a, b, T) triple composed to a matrix with a negative eigenvalue:
/// the triple lies outside the state set.
struct NotAStateError : Error {
  using Error::Error;
};

/// A classification residual landed inside the gray band around the
/// tolerance; the verdict would be a coin flip. Callers should adjust
/// tol or switch to the smoothed classifier.
struct AmbiguousToleranceError : Error {
  double residual = 0.0;
  double threshold = 0.0;
  AmbiguousToleranceError(const std::string& what, double res, double thr)
      : Error(what), residual(res), threshold(thr) {}
};

/// A quadrature rule was paired with a descriptor it was not built for.
struct MismatchedRuleError : Error {
  using Error::Error;
};

/// Kraus operators do not satisfy the trace-preservation condition.
struct NotTracePreservingError : Error {
  using Error::Error;
};

/// Malformed user input (bad JSON, bad flag values).
struct InvalidInputError : Error {
  using Error::Error;
};

}  // namespace isolab

#endif  // ISOLAB_ERRORS_HPP
