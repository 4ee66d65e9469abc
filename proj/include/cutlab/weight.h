// Copyright 2026 The Cutlab Authors.
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

#ifndef CUTLAB_WEIGHT_H_
#define CUTLAB_WEIGHT_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace cutlab {

// A positive integral weight or the "uncuttable" sentinel. The sentinel is
// not a large number: arithmetic on it saturates and it never compares equal
// to a finite value, so an INF element can not sneak into a cheap cut.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(std::int64_t value) : value_(value) {}

  static constexpr Weight inf() { return Weight(kInfRaw); }

  constexpr bool is_inf() const { return value_ == kInfRaw; }
  constexpr bool is_finite() const { return value_ != kInfRaw; }

  // Only meaningful for finite weights.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return Weight(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Weight a, Weight b) = default;
  friend constexpr std::strong_ordering operator<=>(Weight a, Weight b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return is_inf() ? std::string("INF") : std::to_string(value_);
  }

 private:
  static constexpr std::int64_t kInfRaw =
      std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Weight w) {
  return os << w.to_string();
}

// Largest total of finite weights accepted anywhere: its square still fits in
// a signed 64-bit integer, which leaves room for gadget scaling.
inline constexpr std::int64_t kMaxWeightTotal = 3037000499LL;

}  // namespace cutlab

#endif  // CUTLAB_WEIGHT_H_
