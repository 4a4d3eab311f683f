// Copyright 2026 The MMDC Authors
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

#ifndef MMDC_ERROR_HPP_
#define MMDC_ERROR_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mmdc {

// Base of every exception thrown by the library. Infeasibility is not an
// error; it is reported through return values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weights too large for exact 64-bit accumulation.
class OverflowRisk : public Error {
 public:
  using Error::Error;
};

// Enumeration request larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A solver produced an output violating its contract. Never caught
// internally.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

inline std::int64_t CheckedMul(std::int64_t a, std::int64_t b,
                               const char* what) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowRisk(std::string("integer overflow: ") + what);
  }
  return out;
}

inline std::int64_t CheckedAdd(std::int64_t a, std::int64_t b,
                               const char* what) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowRisk(std::string("integer overflow: ") + what);
  }
  return out;
}

}  // namespace mmdc

#endif  // MMDC_ERROR_HPP_
