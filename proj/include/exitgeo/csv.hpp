#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace exitgeo::csv {

/// 17 significant digits, '.' decimal, independent of the C/C++ locale.
/// strtod on the result reproduces the input exactly.
std::string real(double value);

/// Joins fields with commas; fields containing ',' or '"' are quoted.
std::string row(const std::vector<std::string>& fields);

/// Splits one CSV line produced by row().
std::vector<std::string> split(std::string_view line);

}  // namespace exitgeo::csv
