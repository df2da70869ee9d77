/*
   Copyright 2026 The nacf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NACF_ERROR_HPP
#define NACF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nacf {

/// Input outside an operation's domain (n < 2, p | N, zero polynomial, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// An internal algebraic invariant failed; indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string &what) : std::logic_error(what) {}
};

/// Iterative numerics gave up (root solver iteration cap, precision cap).
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace nacf

#endif // NACF_ERROR_HPP
