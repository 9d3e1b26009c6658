#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "techtrend/period.hpp"

namespace techtrend {

/// 100 * |actual - predicted| / actual. Undefined for actual <= 0
/// (throws std::domain_error); callers that tolerate zero actuals skip
/// the row instead.
double relative_error(double actual, double predicted);

/// Mean of row errors. Empty input is an argument error.
double mre(std::span<const double> errors);

/// Median of row errors (even count: mean of the two middle values).
double mdre(std::span<const double> errors);

/// Half-up rounding for display (2 decimals in all reports).
double round_half_up(double value, int decimals);

struct EvaluationRow {
    Period period;
    double actual = 0;
    double predicted = 0;
    double pct_error = 0;  // full precision; round for display only
};

struct EvaluationReport {
    std::string technology_id;
    std::string source;       // "stackexchange" | "github"
    Granularity granularity = Granularity::monthly;
    std::vector<EvaluationRow> rows;
    double mre = 0;
    double mdre = 0;
    std::vector<Period> skipped;  // rows with actual <= 0 (metric undefined)
};

/// Pairs periods/actuals with predictions (argument error on length
/// mismatch), skips undefined rows with a warning entry, and computes the
/// aggregate errors at full precision.
EvaluationReport build_report(const std::string& technology_id, const std::string& source,
                              Granularity granularity,
                              const std::vector<std::pair<Period, double>>& actuals,
                              const std::vector<double>& predictions);

/// CSV `period,actual,predicted,pct_error` (errors displayed at 2
/// decimals, half-up).
void write_report_csv(std::ostream& out, const EvaluationReport& report);

struct SummaryRow {
    std::string area;
    std::string technology_id;
    std::optional<double> monthly_mre, monthly_mdre;
    std::optional<double> quarterly_mre, quarterly_mdre;
};

/// One row per technology, ordered by (area, technology). `area_of` maps
/// a technology id to its knowledge area.
std::vector<SummaryRow> build_summary(const std::vector<EvaluationReport>& reports,
                                      const std::function<std::string(const std::string&)>& area_of);

/// CSV `area,technology,monthly_mre,monthly_mdre,quarterly_mre,quarterly_mdre`;
/// absent cells stay empty.
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

/// Fixed-width table for terminals.
void write_summary_table(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace techtrend
