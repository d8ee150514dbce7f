/*
   Copyright 2026 The circle-orbit Authors

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

#ifndef CIRCLE_ORBIT_ERRORS_HPP
#define CIRCLE_ORBIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circle_orbit {

// Exception hierarchy. Each leaf maps onto one status code of the C API.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain arguments (zero polynomial, wrong degree, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Ring modulus that violates the monic / unit-constant / reciprocal contract.
class InvalidModulus : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Vanishing denominator alpha - beta*gamma (and friends): dependent vectors.
class DegenerateConfiguration : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Enumeration box exceeds the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An exactness assertion failed. Never expected; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_ERRORS_HPP
