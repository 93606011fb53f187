#include "drivedamp/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace drivedamp::csv {

const std::vector<std::string>& all_columns() {
    static const std::vector<std::string> cols = {
        "zeta1",          "zeta2",  "n_l",         "n_m",       "log_negativity",
        "log_negativity_base2", "negativity", "nu_tilde_minus", "stable", "error_code"};
    return cols;
}

std::vector<std::string> parse_columns(std::string_view list) {
    std::vector<std::string> out;
    const auto& known = all_columns();
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        std::string name(list.substr(start, comma - start));
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw Error(ErrorCode::invalid_parameter, "unknown CSV column '" + name + "'");
        }
        out.push_back(std::move(name));
        start = comma + 1;
    }
    return out;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string field(const SweepRow& r, const std::string& col) {
    if (col == "zeta1") return format_double(r.zeta1);
    if (col == "zeta2") return format_double(r.zeta2);
    if (col == "stable") return r.stable ? "true" : "false";
    if (col == "error_code") return r.error ? std::string(to_string(*r.error)) : "";
    if (!r.stable) return "";
    if (col == "n_l") return format_double(r.n_l);
    if (col == "n_m") return format_double(r.n_m);
    if (col == "log_negativity") return format_double(r.log_negativity);
    if (col == "log_negativity_base2") return format_double(r.log_negativity_base2);
    if (col == "negativity") return format_double(r.negativity);
    if (col == "nu_tilde_minus") return format_double(r.nu_tilde_minus);
    return "";
}

}  // namespace

void write(std::ostream& out, const std::vector<SweepRow>& rows,
           const std::vector<std::string>& columns) {
    std::string line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) line += ',';
        line += columns[i];
    }
    out << line << '\n';
    for (const auto& r : rows) {
        line.clear();
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) line += ',';
            line += field(r, columns[i]);
        }
        out << line << '\n';
    }
}

std::string to_string(const std::vector<SweepRow>& rows, const std::vector<std::string>& columns) {
    std::ostringstream os;
    write(os, rows, columns);
    return os.str();
}

std::string gnuplot_script(const std::string& csv_path, const std::vector<std::string>& columns,
                           PlotAxes axes) {
    const auto has = [&](const std::string& c) {
        return std::find(columns.begin(), columns.end(), c) != columns.end();
    };
    std::string value;
    for (const char* c : {"log_negativity", "log_negativity_base2", "negativity"}) {
        if (has(c)) {
            value = c;
            break;
        }
    }
    const bool two_d = axes == PlotAxes::zeta1_zeta2;
    const std::string x = axes == PlotAxes::zeta2 ? "zeta2" : "zeta1";
    if (value.empty() || !has(x) || (two_d && !has("zeta2"))) {
        throw Error(ErrorCode::invalid_parameter,
                    "gnuplot script needs the swept zeta columns and a negativity column");
    }
    const auto col = [](const std::string& c) { return "'" + c + "'"; };

    std::ostringstream s;
    s << "# gnuplot script for " << csv_path << "\n"
      << "set datafile separator ','\n"
      << "set logscale x\n"
      << "set xlabel '" << x << "'\n";
    if (two_d) {
        s << "set logscale y\n"
          << "set ylabel 'zeta2'\n"
          << "set view map\n"
          << "set palette gray\n"
          << "set cblabel '" << value << "'\n"
          << "splot '" << csv_path << "' using " << col(x) << ":" << col("zeta2") << ":"
          << col(value) << " with points pointtype 5 palette notitle\n";
    } else {
        s << "set ylabel '" << value << "'\n"
          << "plot '" << csv_path << "' using " << col(x) << ":" << col(value)
          << " with lines notitle\n";
    }
    return s.str();
}

}  // namespace drivedamp::csv
