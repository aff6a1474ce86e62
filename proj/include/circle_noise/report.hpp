#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "circle_noise/synthesis.hpp"
#include "circle_noise/verify.hpp"

namespace circle_noise {

/// 17 significant digits; "null" for non-finite values.
std::string format_number(double value);

/// {"suite", "config":{N,M,R,seed}, "checks":[...], "overall_pass"} with
/// numbers at 17 significant digits. Output is a pure function of the report.
std::string to_json(const VerificationReport& report);

/// Wide CSV: a "# ..." provenance line, then "replicate,t0,...,t{M-1}" and
/// one row per replicate.
void write_paths_csv(std::ostream& out, const PathEnsemble& ensemble,
                     const std::string& provenance);

/// "# ..." provenance line, then "index,eigenvalue" rows in ascending order.
void write_spectrum_csv(std::ostream& out, std::span<const double> eigenvalues,
                        const std::string& provenance);

}  // namespace circle_noise
