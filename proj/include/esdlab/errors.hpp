// Copyright 2026 The esdlab Authors
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

#ifndef ESDLAB_ERRORS_HPP
#define ESDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace esdlab {

/// Matrix dimension exceeds what the dense kernel supports.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Qubit index outside the register.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical routine failed (e.g. eigen-solver did not converge).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state violated a structural precondition, such as leaving the code space.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace esdlab

#endif  // ESDLAB_ERRORS_HPP
