// Copyright 2026 The Choquet Authors.
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

#ifndef CHOQUET_ERRORS_H_
#define CHOQUET_ERRORS_H_

#include <stdexcept>
#include <string>

#include "choquet/subset.h"

namespace choquet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed set function: wrong length, non-finite entries, n out of range.
class InvalidSetFunction : public Error {
 public:
  using Error::Error;
};

// v(empty) != 0 where a signed capacity is required.
class NotAGame : public Error {
 public:
  explicit NotAGame(double empty_value);
  double empty_value() const { return empty_value_; }

 private:
  double empty_value_;
};

// A covering pair S subset T, |T \ S| = 1, with v(S) > v(T).
class NotMonotone : public Error {
 public:
  NotMonotone(SubsetMask smaller, SubsetMask larger, double smaller_value,
              double larger_value);
  SubsetMask smaller() const { return smaller_; }
  SubsetMask larger() const { return larger_; }
  double smaller_value() const { return smaller_value_; }
  double larger_value() const { return larger_value_; }

 private:
  SubsetMask smaller_;
  SubsetMask larger_;
  double smaller_value_;
  double larger_value_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);
};

class EmptySubset : public Error {
 public:
  using Error::Error;
};

class GroundSetTooLarge : public Error {
 public:
  GroundSetTooLarge(int n, int limit);
};

class UnsupportedGroundSet : public Error {
 public:
  using Error::Error;
};

// Input documents (set-function files, point literals) that fail to parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace choquet

#endif  // CHOQUET_ERRORS_H_
