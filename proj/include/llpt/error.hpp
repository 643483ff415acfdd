// Copyright 2026 The llpt Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace llpt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values that must live over the same carrier do not.
class CarrierMismatch : public Error {
 public:
  CarrierMismatch(const std::string& expected, const std::string& actual)
      : Error("carrier mismatch: expected " + expected + ", got " + actual),
        expected_(expected),
        actual_(actual) {}

  const std::string& expected() const { return expected_; }
  const std::string& actual() const { return actual_; }

 private:
  std::string expected_;
  std::string actual_;
};

/// A carrier (or a subset enumeration over it) exceeds a configured size cap.
class CarrierTooLarge : public Error {
 public:
  CarrierTooLarge(std::size_t size, std::size_t cap)
      : Error("carrier of size " + std::to_string(size) + " exceeds the cap of " +
              std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// An atom table violates monotonicity on the covering pair (smaller, larger).
class NonMonotonicTable : public Error {
 public:
  NonMonotonicTable(std::string smaller, std::string larger)
      : Error("non-monotonic table: image of " + smaller + " is not included in image of " +
              larger),
        smaller_(std::move(smaller)),
        larger_(std::move(larger)) {}

  const std::string& smaller() const { return smaller_; }
  const std::string& larger() const { return larger_; }

 private:
  std::string smaller_;
  std::string larger_;
};

/// Bag construction exceeded the degree bound of the carrier.
class DegreeOverflow : public Error {
 public:
  DegreeOverflow(std::size_t needed, std::size_t bound)
      : Error("multiset degree " + std::to_string(needed) + " exceeds the degree bound " +
              std::to_string(bound)),
        needed_(needed),
        bound_(bound) {}

  std::size_t needed() const { return needed_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t needed_;
  std::size_t bound_;
};

}  // namespace llpt
