#include "situkg/literal.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace situkg {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

constexpr std::array<std::string_view, 14> kExactNumeric = {
    "integer", "decimal", "int", "long", "short", "byte",
    "nonNegativeInteger", "positiveInteger", "negativeInteger", "nonPositiveInteger",
    "unsignedLong", "unsignedInt", "unsignedShort", "unsignedByte"};

std::string_view xsd_local(std::string_view datatype) {
  if (datatype.substr(0, ns::kXsd.size()) != ns::kXsd) return {};
  return datatype.substr(ns::kXsd.size());
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_leap(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

bool valid_timezone(std::string_view tz) {
  if (tz.empty() || tz == "Z") return true;
  if (tz.size() != 6 || (tz[0] != '+' && tz[0] != '-') || tz[3] != ':') return false;
  auto hh = parse_int(tz.substr(1, 2));
  auto mm = parse_int(tz.substr(4, 2));
  return all_digits(tz.substr(1, 2)) && all_digits(tz.substr(4, 2)) && hh && mm && *hh <= 14 &&
         *mm < 60;
}

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view s) {
  Decimal d;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    d.negative = s[0] == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (dot != std::string_view::npos && !frac_part.empty() && !all_digits(frac_part))
    return std::nullopt;
  if (dot != std::string_view::npos && frac_part.empty() && int_part.empty()) return std::nullopt;

  auto first = int_part.find_first_not_of('0');
  d.integer_digits = first == std::string_view::npos ? "" : std::string(int_part.substr(first));
  auto last = frac_part.find_last_not_of('0');
  d.fraction_digits = last == std::string_view::npos ? "" : std::string(frac_part.substr(0, last + 1));
  if (d.is_zero()) d.negative = false;
  return d;
}

double Decimal::to_double() const {
  std::string text = negative ? "-" : "";
  text += integer_digits.empty() ? "0" : integer_digits;
  if (!fraction_digits.empty()) text += "." + fraction_digits;
  return std::strtod(text.c_str(), nullptr);
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  if (a.negative != b.negative) {
    return a.negative ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  auto magnitude = [](const Decimal& x, const Decimal& y) {
    if (x.integer_digits.size() != y.integer_digits.size())
      return x.integer_digits.size() <=> y.integer_digits.size();
    if (auto c = x.integer_digits.compare(y.integer_digits); c != 0) return c <=> 0;
    // Fractions have no trailing zeros, so plain lexicographic order works.
    return x.fraction_digits.compare(y.fraction_digits) <=> 0;
  };
  auto m = magnitude(a, b);
  if (a.negative) return 0 <=> m;
  return m;
}

bool is_exact_numeric_datatype(std::string_view datatype) {
  auto local = xsd_local(datatype);
  if (local.empty()) return false;
  for (auto name : kExactNumeric) {
    if (name == local) return true;
  }
  return false;
}

bool is_numeric_datatype(std::string_view datatype) {
  auto local = xsd_local(datatype);
  return is_exact_numeric_datatype(datatype) || local == "double" || local == "float";
}

std::optional<Numeric> numeric_value(const Term& term) {
  if (!term.is_literal() || !is_numeric_datatype(term.datatype())) return std::nullopt;
  const std::string& lex = term.value();
  Numeric n;
  if (is_exact_numeric_datatype(term.datatype())) {
    auto d = Decimal::parse(lex);
    if (!d) return std::nullopt;
    bool integral = xsd_local(term.datatype()) != "decimal";
    if (integral && lex.find('.') != std::string::npos) return std::nullopt;
    n.decimal = *d;
    n.approx = d->to_double();
    return n;
  }
  // xsd:double / xsd:float
  if (lex == "INF" || lex == "+INF") {
    n.exact = false;
    n.approx = HUGE_VAL;
    return n;
  }
  if (lex == "-INF") {
    n.exact = false;
    n.approx = -HUGE_VAL;
    return n;
  }
  if (lex == "NaN") {
    n.exact = false;
    n.approx = std::nan("");
    return n;
  }
  if (lex.empty()) return std::nullopt;
  std::string_view body = lex;
  if (body[0] == '+' || body[0] == '-') body.remove_prefix(1);
  auto e = body.find_first_of("eE");
  auto mantissa = body.substr(0, e);
  if (!Decimal::parse(mantissa)) return std::nullopt;
  if (e != std::string_view::npos) {
    auto exp = body.substr(e + 1);
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) exp.remove_prefix(1);
    if (!all_digits(exp)) return std::nullopt;
  }
  n.exact = false;
  n.approx = std::strtod(lex.c_str(), nullptr);
  return n;
}

std::partial_ordering compare_numeric(const Numeric& a, const Numeric& b) {
  if (a.exact && b.exact) return a.decimal <=> b.decimal;
  return a.approx <=> b.approx;
}

std::optional<Date> Date::parse(std::string_view s) {
  bool negative_year = !s.empty() && s[0] == '-';
  if (negative_year) s.remove_prefix(1);
  auto dash = s.find('-');
  if (dash == std::string_view::npos || dash < 4) return std::nullopt;
  auto year_text = s.substr(0, dash);
  if (!all_digits(year_text) || (year_text.size() > 4 && year_text[0] == '0')) return std::nullopt;
  if (s.size() < dash + 6 || s[dash + 3] != '-') return std::nullopt;
  auto month_text = s.substr(dash + 1, 2);
  auto day_text = s.substr(dash + 4, 2);
  if (!all_digits(month_text) || !all_digits(day_text)) return std::nullopt;
  if (!valid_timezone(s.substr(dash + 6))) return std::nullopt;

  auto year = parse_int(year_text);
  auto month = parse_int(month_text);
  auto day = parse_int(day_text);
  if (!year || !month || !day) return std::nullopt;
  if (*month < 1 || *month > 12) return std::nullopt;
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int max_day = kDays[*month - 1] + (*month == 2 && is_leap(*year) ? 1 : 0);
  if (*day < 1 || *day > max_day) return std::nullopt;
  return Date{negative_year ? -*year : *year, *month, *day};
}

bool is_valid_date_lexical(std::string_view lexical) { return Date::parse(lexical).has_value(); }

std::optional<Date> date_value(const Term& term) {
  if (!term.is_literal()) return std::nullopt;
  if (term.datatype() == iri::kXsdDate) return Date::parse(term.value());
  if (term.datatype() == iri::kXsdDateTime) {
    auto t = term.value().find('T');
    if (t == std::string::npos) return std::nullopt;
    return Date::parse(std::string_view(term.value()).substr(0, t));
  }
  return std::nullopt;
}

}  // namespace situkg
