#pragma once

#include <optional>
#include <string>

#include "ismt/instance.hpp"
#include "ismt/oracle.hpp"
#include "ismt/solver.hpp"

namespace ismt {

// JSON solve report with a fixed field order, so two runs over the same
// input are byte-identical except for timing_ms. Edge lists are sorted by
// (min endpoint, max endpoint); vertex ids are 0-based.
std::string write_report(const Instance& inst, const Solution& sol,
                         const std::optional<double>& exact_weight, double timing_ms);

// Report for the exact brute-force solver.
std::string write_exact_report(const Instance& inst, const OracleResult& result, double timing_ms);

}  // namespace ismt
