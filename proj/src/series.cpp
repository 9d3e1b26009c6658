#include "techtrend/series.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace techtrend {

Aggregator::Aggregator(Granularity granularity, Period start, Period end, std::string source)
    : granularity_(granularity), start_(start), end_(end), source_(std::move(source)) {
    if (start.granularity != granularity || end.granularity != granularity)
        throw std::invalid_argument("aggregate: range granularity mismatch");
    if (end < start) throw std::invalid_argument("aggregate: start period is after end period");
}

void Aggregator::add(UtcTimestamp ts, const std::vector<std::string>& technology_ids) {
    if (technology_ids.empty()) return;
    Period p = bucket_period(ts, granularity_);
    if (p < start_ || end_ < p) return;
    std::size_t slot = static_cast<std::size_t>(p.linear() - start_.linear());
    std::size_t len = static_cast<std::size_t>(period_span(start_, end_));
    for (const std::string& id : technology_ids) {
        auto& counts = counts_[id];
        if (counts.empty()) counts.assign(len, 0);
        ++counts[slot];
    }
}

void Aggregator::merge(const Aggregator& other) {
    for (const auto& [id, counts] : other.counts_) {
        auto& mine = counts_[id];
        if (mine.empty()) mine.assign(counts.size(), 0);
        for (std::size_t i = 0; i < counts.size(); ++i) mine[i] += counts[i];
    }
}

std::map<std::string, TimeSeries> Aggregator::finish() const {
    std::map<std::string, TimeSeries> out;
    for (const auto& [id, counts] : counts_) {
        TimeSeries s;
        s.technology_id = id;
        s.granularity = granularity_;
        s.start = start_;
        s.counts = counts;
        s.source = source_;
        out.emplace(id, std::move(s));
    }
    return out;
}

std::map<std::string, TimeSeries> aggregate(const std::vector<ClassifiedRecord>& records,
                                            Granularity granularity, Period start, Period end,
                                            const std::string& source) {
    Aggregator agg(granularity, start, end, source);
    for (const ClassifiedRecord& r : records) agg.add(r.timestamp, r.technology_ids);
    return agg.finish();
}

std::uint64_t sum_check(const TimeSeries& series) {
    std::uint64_t sum = 0;
    for (std::uint64_t c : series.counts) sum += c;
    return sum;
}

TimeSeries fold_to_quarterly(const TimeSeries& monthly) {
    if (monthly.granularity != Granularity::monthly)
        throw std::invalid_argument("fold_to_quarterly: input must be monthly");
    TimeSeries q;
    q.technology_id = monthly.technology_id;
    q.granularity = Granularity::quarterly;
    q.source = monthly.source;
    if (monthly.counts.empty()) {
        q.start = Period{Granularity::quarterly, monthly.start.year, (monthly.start.index - 1) / 3 + 1};
        return q;
    }
    Period first = monthly.start;
    q.start = Period{Granularity::quarterly, first.year, (first.index - 1) / 3 + 1};
    Period lastm = monthly.period_at(monthly.size() - 1);
    Period lastq{Granularity::quarterly, lastm.year, (lastm.index - 1) / 3 + 1};
    q.counts.assign(static_cast<std::size_t>(period_span(q.start, lastq)), 0);
    for (std::size_t i = 0; i < monthly.size(); ++i) {
        Period m = monthly.period_at(i);
        Period qq{Granularity::quarterly, m.year, (m.index - 1) / 3 + 1};
        q.counts[static_cast<std::size_t>(qq.linear() - q.start.linear())] += monthly.counts[i];
    }
    return q;
}

void write_series_csv(std::ostream& out, const std::map<std::string, TimeSeries>& series) {
    out << "technology,granularity,period,count\n";
    for (const auto& [id, s] : series)
        for (std::size_t i = 0; i < s.size(); ++i)
            out << id << ',' << to_string(s.granularity) << ',' << s.period_at(i).str() << ','
                << s.counts[i] << '\n';
}

std::map<std::string, TimeSeries> read_series_csv(std::istream& in, const std::string& source) {
    std::map<std::string, TimeSeries> out;
    std::string line;
    if (!std::getline(in, line)) return out;
    if (line.rfind("technology,", 0) != 0)
        throw std::runtime_error("series CSV: unexpected header: " + line);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string id, gran, period, count;
        if (!std::getline(ss, id, ',') || !std::getline(ss, gran, ',')
            || !std::getline(ss, period, ',') || !std::getline(ss, count))
            throw std::runtime_error("series CSV: bad row at line " + std::to_string(lineno));
        auto g = granularity_from_string(gran);
        auto p = parse_period(period);
        if (!g || !p || p->granularity != *g)
            throw std::runtime_error("series CSV: bad period at line " + std::to_string(lineno));
        std::uint64_t c = std::stoull(count);

        auto [it, fresh] = out.try_emplace(id);
        TimeSeries& s = it->second;
        if (fresh) {
            s.technology_id = id;
            s.granularity = *g;
            s.start = *p;
            s.source = source;
        } else if (p->linear() != s.start.linear() + static_cast<std::int64_t>(s.counts.size())) {
            throw std::runtime_error("series CSV: non-contiguous periods at line "
                                     + std::to_string(lineno));
        }
        s.counts.push_back(c);
    }
    return out;
}

}  // namespace techtrend
