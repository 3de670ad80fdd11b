#pragma once

// Command-line front end: one binary, one subcommand per run, one report
// envelope on stdout.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dmod/report.hpp"

namespace dmod::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_computation_error = 1;
inline constexpr int exit_usage_error = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Side-by-side data for the vanishing-cycle / periodic-orbit correspondence:
/// Milnor numbers of r o f (r(s) = s^2) and of f over Q and F_p, the periodic
/// count of the Euler-discretized gradient field, and the critical locus.
/// Exploratory only; nothing is asserted. RefuseChar2 for p = 2.
Json theorem1_probe(const MPoly& f, const std::vector<std::string>& vars, std::uint64_t p, std::int64_t h,
                    std::uint64_t budget, unsigned n_max = default_truncation_limit);

/// Summary over a curve sweep, grouped by prime.
Json curve_sweep_summary(const std::vector<SliceCountReport>& reports);

/// Aligned key/value table for a payload.
std::string render_text(const Json& payload);

/// Variables for a set of polynomial texts and operator texts: explicit names
/// win, otherwise identifiers in natural order, skipping derivative tokens.
std::vector<std::string> infer_vars(const std::vector<std::string>& explicit_vars,
                                    const std::vector<std::string>& poly_texts,
                                    const std::vector<std::string>& operator_texts = {});

}  // namespace dmod::cli
