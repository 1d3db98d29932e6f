#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "situkg/term.h"

namespace situkg {

/// Exact decimal value parsed from an xsd:decimal/xsd:integer lexical form.
/// Stored as sign plus normalized digit strings (no leading zeros in the
/// integer part, no trailing zeros in the fraction).
struct Decimal {
  bool negative = false;
  std::string integer_digits;   // "" means zero
  std::string fraction_digits;  // "" means no fractional part

  static std::optional<Decimal> parse(std::string_view lexical);
  bool is_zero() const noexcept { return integer_digits.empty() && fraction_digits.empty(); }
  double to_double() const;

  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);
  friend bool operator==(const Decimal& a, const Decimal& b) = default;
};

/// A numeric literal value. Exact unless it came from xsd:double/xsd:float.
struct Numeric {
  bool exact = true;
  Decimal decimal;       // valid when exact
  double approx = 0.0;   // always valid
};

/// Calendar date with optional timezone text (kept only for display).
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  static std::optional<Date> parse(std::string_view lexical);
  friend auto operator<=>(const Date&, const Date&) = default;
};

bool is_numeric_datatype(std::string_view datatype);
bool is_exact_numeric_datatype(std::string_view datatype);

/// Numeric value of a literal, or nullopt when the term is not a numeric
/// literal or its lexical form is invalid.
std::optional<Numeric> numeric_value(const Term& term);

/// Value comparison; unordered only for NaN doubles.
std::partial_ordering compare_numeric(const Numeric& a, const Numeric& b);

/// Calendar value of an xsd:date literal (xsd:dateTime yields its date part).
std::optional<Date> date_value(const Term& term);

/// Checks an xsd:date lexical form such as "2023-06-26" (optional timezone).
bool is_valid_date_lexical(std::string_view lexical);

}  // namespace situkg
