// Copyright 2026 The ffactor Authors.
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

#include <compare>
#include <cstdint>
#include <string>

namespace ffactor {

// A vertex capacity: a natural number, or OMEGA standing in for aleph-0.
// OMEGA orders above every natural number and absorbs decrements.
class Capacity {
 public:
  constexpr Capacity() = default;
  constexpr explicit Capacity(std::uint32_t n) : value_(n) {}

  static constexpr Capacity omega() {
    Capacity c;
    c.omega_ = true;
    return c;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }
  constexpr bool positive() const { return omega_ || value_ > 0; }

  // Only meaningful for finite capacities.
  constexpr std::uint32_t value() const { return value_; }

  // The f_{x,y} rule: finite positive values drop by one, 0 and OMEGA stay.
  constexpr Capacity decremented() const {
    if (omega_ || value_ == 0) return *this;
    return Capacity(value_ - 1);
  }

  // Pointwise f - d. Throws CapacityUnderflow when d exceeds a finite value.
  Capacity minus(std::uint64_t d) const;

  // True when a vertex of this capacity can carry `degree` factor edges.
  constexpr bool admits(std::uint64_t degree) const {
    return omega_ || degree <= value_;
  }

  // True when `degree` meets the capacity exactly. Never true for OMEGA.
  constexpr bool saturated_by(std::uint64_t degree) const {
    return !omega_ && degree == value_;
  }

  constexpr std::strong_ordering operator<=>(const Capacity& other) const {
    if (omega_ != other.omega_) {
      return omega_ ? std::strong_ordering::greater
                    : std::strong_ordering::less;
    }
    if (omega_) return std::strong_ordering::equal;
    return value_ <=> other.value_;
  }
  constexpr bool operator==(const Capacity& other) const {
    return omega_ == other.omega_ && (omega_ || value_ == other.value_);
  }

  std::string to_string() const;

 private:
  std::uint32_t value_ = 0;
  bool omega_ = false;
};

}  // namespace ffactor
