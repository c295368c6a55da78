// Copyright 2026 The Credible Authors
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

#ifndef CREDIBLE_ERRORS_H_
#define CREDIBLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace credible {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file, dimension mismatch or any other caller mistake.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured size limit (history nodes, profiles, joint states) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedHorizon : public Error {
 public:
  using Error::Error;
};

// A stage game with three or more players and no pure equilibrium.
class NoStageNashFound : public Error {
 public:
  using Error::Error;
};

// Two equivalent subtrees whose strategy restrictions differ only up to a
// nontrivial automorphism, so no single correspondence can be fixed.
class AmbiguousIsomorphism : public Error {
 public:
  using Error::Error;
};

}  // namespace credible

#endif  // CREDIBLE_ERRORS_H_
