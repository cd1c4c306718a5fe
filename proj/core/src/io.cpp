#include "ballave/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ballave {

namespace {

std::string timestamp_line() {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return std::string("# generated-by ballave ") + buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::ios_base::failure("cannot open for writing: " + path);
    return out;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
    auto out = open_out(path);
    out << timestamp_line() << "\n";
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << columns[c] << (c + 1 < columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw std::invalid_argument("csv row width does not match the header");
        for (std::size_t c = 0; c < row.size(); ++c)
            out << row[c] << (c + 1 < row.size() ? "," : "");
        out << "\n";
    }
    if (!out)
        throw std::ios_base::failure("write failed: " + path);
}

void save_field_csv(const std::string& path, const SampledField& f) {
    auto out = open_out(path);
    const bool real = f.max_imag() <= 1e-10;
    out << "dim,samples,kind\n";
    out << f.grid.dim << "," << f.grid.samples_per_axis << "," << (real ? "real" : "complex")
        << "\n";
    for (const auto& v : f.values) {
        out << format_double(v.real());
        if (!real)
            out << "," << format_double(v.imag());
        out << "\n";
    }
    if (!out)
        throw std::ios_base::failure("write failed: " + path);
}

SampledField load_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "dim,samples,kind")
        throw std::runtime_error("bad field header in " + path);
    if (!std::getline(in, line))
        throw std::runtime_error("truncated field file " + path);
    int dim = 0, samples = 0;
    char kind[16] = {0};
    if (std::sscanf(line.c_str(), "%d,%d,%15s", &dim, &samples, kind) != 3)
        throw std::runtime_error("bad field shape line in " + path);
    const bool real = std::string(kind) == "real";

    GridSpec grid = make_grid(dim, samples);
    std::vector<Complex> values;
    values.reserve(grid.point_count());
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        double re = 0.0, im = 0.0;
        if (real) {
            if (std::sscanf(line.c_str(), "%lf", &re) != 1)
                throw std::runtime_error("bad sample row in " + path);
        } else if (std::sscanf(line.c_str(), "%lf,%lf", &re, &im) != 2) {
            throw std::runtime_error("bad sample row in " + path);
        }
        values.emplace_back(re, im);
    }
    return SampledField(grid, std::move(values));
}

void write_table_csv(const std::string& path, const RadialMultiplierTable& table) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(table.entries.size());
    for (const auto& [s, v] : table.entries)
        rows.push_back({format_double(s), format_double(v)});
    write_csv(path, {"radius", table_kind_name(table.kind)}, rows);
}

void write_norm_report_csv(const std::string& path, const NormReport& report) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : report.per_scale)
        rows.push_back({std::to_string(k), format_double(v)});
    rows.push_back({"lp_term", format_double(report.lp_term)});
    rows.push_back({"aggregate", format_double(report.aggregate)});
    write_csv(path, {"k", "summand"}, rows);
}

void write_slope_csv(const std::string& path, const SlopeFit& fit,
                     const std::vector<std::pair<double, double>>& points) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [x, y] : points)
        rows.push_back({format_double(x), format_double(y)});
    rows.push_back({"slope", format_double(fit.slope)});
    rows.push_back({"intercept", format_double(fit.intercept)});
    rows.push_back({"max_residual", format_double(fit.max_residual)});
    write_csv(path, {"x", "log2_value"}, rows);
}

void write_ratio_csv(const std::string& path, const RatioStudy& study) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : study.entries)
        rows.push_back({e.label, format_double(e.ball_norm), format_double(e.classical_norm),
                        format_double(e.ratio)});
    write_csv(path, {"function", "ball_norm", "classical_norm", "ratio"}, rows);
}

void write_refinement_csv(const std::string& path, const std::vector<RefinementRow>& rows_in) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rows_in)
        rows.push_back({std::to_string(r.samples), format_double(r.value),
                        format_double(r.rel_change)});
    write_csv(path, {"samples", "value", "rel_change"}, rows);
}

} // namespace ballave
