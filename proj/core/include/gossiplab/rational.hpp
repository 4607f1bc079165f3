/*
 * Copyright 2026 The gossip_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gossiplab {

__extension__ typedef __int128 WideInt;

/// Exact rational number with a 64-bit numerator and a positive 64-bit
/// denominator, always kept in lowest terms.
///
/// Intermediate products are computed in 128-bit arithmetic; a result that
/// does not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  double to_double() const;

  /// Largest integer not greater than this value.
  std::int64_t floor() const;

  /// Round half up to the nearest integer.
  std::int64_t round_half_up() const;

  /// Fixed-point decimal rendering, rounded half away from zero.
  std::string to_decimal(int fractional_digits) const;

  /// Shortest exact decimal if the denominator only has factors 2 and 5,
  /// otherwise `fallback_digits` fractional digits with trailing zeros kept.
  std::string to_shortest_decimal(int fallback_digits = 12) const;

  /// "num/den", or just "num" for integers.
  std::string to_string() const;

  /// Accepts "3", "-2", "0.005", "1.5e-2"-free decimals, and "a/b".
  /// Throws GossipError(ParseError) on malformed input.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(WideInt num, WideInt den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gossiplab
