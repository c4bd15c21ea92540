#ifndef RINGSPREAD_CLI_FORMAT_HPP
#define RINGSPREAD_CLI_FORMAT_HPP

#include <string>
#include <string_view>

namespace ringspread::cli {

/// Shortest decimal string that parses back to exactly `x`; "inf"/"-inf"/"nan"
/// for non-finite values. Locale independent.
std::string shortest(double x);

/// `x` rounded to 10 significant digits.
double round_significant(double x, int digits = 10);

/// Shortest representation of `x` after rounding to 10 significant digits.
std::string sig10(double x);

/// Double-quoted string with JSON escapes (also valid YAML).
std::string quoted(std::string_view s);

/// RFC 4180 field: quoted only when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace ringspread::cli

#endif  // RINGSPREAD_CLI_FORMAT_HPP
