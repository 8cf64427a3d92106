// Copyright 2026 The SCIG Authors
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

#ifndef SCIG_ERRORS_H_
#define SCIG_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scig {

// Base for every recoverable engine error. Each subclass maps to one stable
// CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const = 0;
};

// Malformed instance, suite configuration or parameter text.
class ParseError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

// A permutation that is not a bijection on the agents.
class InvalidPermutationError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

// m! enumeration requested above the permutation cap.
class CapExceededError : public Error {
 public:
  CapExceededError(int agents, int cap);
  int exit_code() const override { return 4; }
  int agents() const { return agents_; }
  int cap() const { return cap_; }

 private:
  int agents_;
  int cap_;
};

// Joint-strategy enumeration larger than the configured budget.
class BudgetExceededError : public Error {
 public:
  // `required` is empty when the count does not fit in 64 bits.
  BudgetExceededError(std::string required, std::uint64_t budget);
  int exit_code() const override { return 5; }
  const std::string& required() const { return required_; }

 private:
  std::string required_;
};

}  // namespace scig

#endif  // SCIG_ERRORS_H_
