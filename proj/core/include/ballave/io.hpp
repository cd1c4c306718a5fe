#pragma once

#include <string>
#include <vector>

#include "ballave/field.hpp"
#include "ballave/harness.hpp"
#include "ballave/multipliers.hpp"
#include "ballave/norms.hpp"

namespace ballave {

/// Shortest round-trippable decimal form of a double (%.17g).
std::string format_double(double v);

/// CSV rows under a "# generated-by" comment header; writers are
/// deterministic apart from that single timestamp line.
void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

/// Field layout: one header row (dim, samples, kind) then row-major samples,
/// one column for real fields, two for complex.
void save_field_csv(const std::string& path, const SampledField& f);
SampledField load_field_csv(const std::string& path);

void write_table_csv(const std::string& path, const RadialMultiplierTable& table);
void write_norm_report_csv(const std::string& path, const NormReport& report);
void write_slope_csv(const std::string& path, const SlopeFit& fit,
                     const std::vector<std::pair<double, double>>& points);
void write_ratio_csv(const std::string& path, const RatioStudy& study);
void write_refinement_csv(const std::string& path, const std::vector<RefinementRow>& rows);

} // namespace ballave
