#include "techtrend/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

namespace techtrend {

double relative_error(double actual, double predicted) {
    if (!(actual > 0)) throw std::domain_error("relative_error: undefined for actual <= 0");
    return 100.0 * std::abs(actual - predicted) / actual;
}

double mre(std::span<const double> errors) {
    if (errors.empty()) throw std::invalid_argument("mre: no rows");
    double sum = 0;
    for (double e : errors) sum += e;
    return sum / static_cast<double>(errors.size());
}

double mdre(std::span<const double> errors) {
    if (errors.empty()) throw std::invalid_argument("mdre: no rows");
    std::vector<double> sorted(errors.begin(), errors.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

double round_half_up(double value, int decimals) {
    double scale = std::pow(10.0, decimals);
    // the tiny nudge keeps x.xx5 values written by 2-decimal sources from
    // rounding down through binary representation error
    return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

EvaluationReport build_report(const std::string& technology_id, const std::string& source,
                              Granularity granularity,
                              const std::vector<std::pair<Period, double>>& actuals,
                              const std::vector<double>& predictions) {
    if (actuals.size() != predictions.size())
        throw std::invalid_argument("build_report: actuals and predictions differ in length");

    EvaluationReport rep;
    rep.technology_id = technology_id;
    rep.source = source;
    rep.granularity = granularity;

    std::vector<double> errors;
    errors.reserve(actuals.size());
    for (std::size_t i = 0; i < actuals.size(); ++i) {
        const auto& [period, actual] = actuals[i];
        if (!(actual > 0)) {
            rep.skipped.push_back(period);
            continue;
        }
        EvaluationRow row;
        row.period = period;
        row.actual = actual;
        row.predicted = predictions[i];
        row.pct_error = relative_error(actual, predictions[i]);
        errors.push_back(row.pct_error);
        rep.rows.push_back(row);
    }
    if (!errors.empty()) {
        rep.mre = mre(errors);
        rep.mdre = mdre(errors);
    }
    return rep;
}

namespace {

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", round_half_up(v, 2));
    return buf;
}

// shortest representation that round-trips
std::string fmtg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0;
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

}  // namespace

void write_report_csv(std::ostream& out, const EvaluationReport& report) {
    out << "period,actual,predicted,pct_error\n";
    for (const EvaluationRow& r : report.rows)
        out << r.period.str() << ',' << fmtg(r.actual) << ',' << fmtg(r.predicted) << ','
            << fmt2(r.pct_error) << '\n';
}

std::vector<SummaryRow> build_summary(const std::vector<EvaluationReport>& reports,
                                      const std::function<std::string(const std::string&)>& area_of) {
    std::map<std::pair<std::string, std::string>, SummaryRow> rows;
    for (const EvaluationReport& rep : reports) {
        if (rep.rows.empty()) continue;
        std::string area = area_of(rep.technology_id);
        SummaryRow& row = rows[{area, rep.technology_id}];
        row.area = area;
        row.technology_id = rep.technology_id;
        if (rep.granularity == Granularity::monthly) {
            row.monthly_mre = rep.mre;
            row.monthly_mdre = rep.mdre;
        } else if (rep.granularity == Granularity::quarterly) {
            row.quarterly_mre = rep.mre;
            row.quarterly_mdre = rep.mdre;
        }
    }
    std::vector<SummaryRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    return out;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? fmt2(*v) : std::string(); }

}  // namespace

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "area,technology,monthly_mre,monthly_mdre,quarterly_mre,quarterly_mdre\n";
    for (const SummaryRow& r : rows)
        out << r.area << ',' << r.technology_id << ',' << cell(r.monthly_mre) << ','
            << cell(r.monthly_mdre) << ',' << cell(r.quarterly_mre) << ','
            << cell(r.quarterly_mdre) << '\n';
}

void write_summary_table(std::ostream& out, const std::vector<SummaryRow>& rows) {
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    std::size_t wa = 4, wt = 10;
    for (const SummaryRow& r : rows) {
        wa = std::max(wa, r.area.size());
        wt = std::max(wt, r.technology_id.size());
    }
    out << pad("area", wa) << "  " << pad("technology", wt)
        << "  monthly MRE  monthly MdRE  quarterly MRE  quarterly MdRE\n";
    for (const SummaryRow& r : rows) {
        auto num = [&](const std::optional<double>& v, std::size_t w) {
            std::string s = v ? fmt2(*v) + "%" : "-";
            std::string padded(w > s.size() ? w - s.size() : 0, ' ');
            return padded + s;
        };
        out << pad(r.area, wa) << "  " << pad(r.technology_id, wt) << "  "
            << num(r.monthly_mre, 11) << "  " << num(r.monthly_mdre, 12) << "  "
            << num(r.quarterly_mre, 13) << "  " << num(r.quarterly_mdre, 14) << '\n';
    }
}

}  // namespace techtrend
