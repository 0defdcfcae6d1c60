// Copyright 2026 The tourney Authors.
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

// Exact rational numbers and their canonical text form.
//
// Accepted input forms: "3", "-3", "1/2", "-7/14", "0.3", "-1.25", ".5".
// Output form is "p/q" in lowest terms with q > 0, or plain "p" when q == 1.

#ifndef TOURNEY_RATIONAL_HPP_
#define TOURNEY_RATIONAL_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "tourney/errors.hpp"

namespace tourney {

// Plain values, no expression templates.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Base-10 digits to BigInt. BigInt's string constructor reads a leading 0
// as an octal prefix, so leading zeros are stripped first.
inline BigInt decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt{std::string(digits)};
}

}  // namespace detail

/// Parses an exact rational. Decimals convert exactly ("0.3" is 3/10).
/// Throws InvalidInput on anything else, including a zero denominator.
inline Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&](const char* why) -> Rational {
    throw InvalidInput("non-rational entry '" + std::string(original) +
                       "': " + why);
  };
  text = detail::trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return fail("empty");

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
      return fail("expected digits around '/'");
    }
    const BigInt d = detail::decimal_digits(den);
    if (d == 0) return fail("zero denominator");
    value = Rational(detail::decimal_digits(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !detail::all_digits(whole)) ||
        (!frac.empty() && !detail::all_digits(frac))) {
      return fail("malformed decimal");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(frac.size()));
    const std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
    value = Rational(detail::decimal_digits(digits), scale);
  } else {
    if (!detail::all_digits(text)) return fail("expected an integer, p/q or decimal");
    value = Rational(detail::decimal_digits(text));
  }
  return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Narrowing to int64 for values known to be small integers.
inline std::optional<std::int64_t> to_int64(const Rational& r) {
  if (!is_integer(r)) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(r);
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return num.convert_to<std::int64_t>();
}

}  // namespace tourney

#endif  // TOURNEY_RATIONAL_HPP_
