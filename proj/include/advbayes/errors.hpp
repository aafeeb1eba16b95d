// Copyright 2026 The advbayes Authors
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

#ifndef ADVBAYES_ERRORS_HPP_
#define ADVBAYES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace advbayes {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, std::string field = {})
      : Error(what), line_(line), field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// A density derivative was requested exactly at a piecewise breakpoint.
class BreakpointDerivative : public Error {
 public:
  explicit BreakpointDerivative(double x)
      : Error("density derivative requested at breakpoint x=" +
              std::to_string(x)),
        x_(x) {}
  double x() const { return x_; }

 private:
  double x_;
};

class OutsideSupport : public Error {
 public:
  using Error::Error;
};

// p1 == p0 on a cell of positive length; the Bayes classifier is not unique.
class DegenerateTie : public Error {
 public:
  using Error::Error;
};

class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

class WindowEmpty : public Error {
 public:
  using Error::Error;
};

class AssumptionUnmet : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

}  // namespace advbayes

#endif  // ADVBAYES_ERRORS_HPP_
