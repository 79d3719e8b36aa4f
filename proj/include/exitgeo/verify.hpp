#pragma once

#include "exitgeo/brownian.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace exitgeo::verify {

/// One line of a verification report.
struct Check {
    std::string suite;
    std::string name;
    brownian::Verdict status = brownian::Verdict::inconclusive;
    double measured = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Suite names accepted by run(): all, dynkin, exit-comparison, eigen, sharpness.
const std::vector<std::string>& suite_names();

/// Runs one suite; cfg only matters for exit-comparison. Throws DomainError
/// for an unknown suite name.
std::vector<Check> run(std::string_view suite, const SimConfig& cfg);

bool all_passed(const std::vector<Check>& checks);

std::vector<std::string> csv_header();
std::vector<std::string> csv_fields(const Check& c);

}  // namespace exitgeo::verify
