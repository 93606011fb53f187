#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "drivedamp/sweep.hpp"

namespace drivedamp::csv {

/// zeta1,zeta2,n_l,n_m,log_negativity,log_negativity_base2,negativity,
/// nu_tilde_minus,stable,error_code
const std::vector<std::string>& all_columns();

/// Parses a comma separated column list; throws Error(invalid_parameter)
/// for unknown names.
std::vector<std::string> parse_columns(std::string_view list);

/// Shortest round-trip-safe text for a double: 17 significant digits.
std::string format_double(double x);

/// Header plus one line per row, '\n' terminated. Rows that failed carry
/// empty numeric fields and their error code.
void write(std::ostream& out, const std::vector<SweepRow>& rows,
           const std::vector<std::string>& columns = all_columns());

std::string to_string(const std::vector<SweepRow>& rows,
                      const std::vector<std::string>& columns = all_columns());

enum class PlotAxes { zeta1, zeta2, zeta1_zeta2 };

/// Companion gnuplot script for a sweep CSV, addressing columns by header name.
/// Throws Error(invalid_parameter) if the swept axes or every negativity
/// column are missing from `columns`.
std::string gnuplot_script(const std::string& csv_path, const std::vector<std::string>& columns,
                           PlotAxes axes);

}  // namespace drivedamp::csv
