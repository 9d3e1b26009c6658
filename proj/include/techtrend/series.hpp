#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "techtrend/period.hpp"

namespace techtrend {

/// Equally spaced, gap-free counts for one technology. Periods inside the
/// covered range that saw no records are explicit zeros.
struct TimeSeries {
    std::string technology_id;
    Granularity granularity = Granularity::monthly;
    Period start;                      // period of counts[0]
    std::vector<std::uint64_t> counts;
    std::string source;                // "stackexchange" | "github"

    Period period_at(std::size_t i) const {
        return Period::from_linear(granularity, start.linear() + static_cast<std::int64_t>(i));
    }
    std::size_t size() const { return counts.size(); }

    std::vector<double> values() const {
        return std::vector<double>(counts.begin(), counts.end());
    }
};

/// One classified record: when it happened and which technologies it
/// mentions.
struct ClassifiedRecord {
    UtcTimestamp timestamp;
    std::vector<std::string> technology_ids;
};

/// Counts records per (technology, period) over [start, end]; a record
/// with k matching technologies increments k series. Records outside the
/// range are ignored. start > end is an argument error.
std::map<std::string, TimeSeries> aggregate(const std::vector<ClassifiedRecord>& records,
                                            Granularity granularity, Period start, Period end,
                                            const std::string& source = "");

/// Incremental variant used by the pipeline so stores stream through
/// without materializing all records.
class Aggregator {
public:
    Aggregator(Granularity granularity, Period start, Period end, std::string source);

    void add(UtcTimestamp ts, const std::vector<std::string>& technology_ids);

    /// Series for every technology seen (zeros filled across the range).
    std::map<std::string, TimeSeries> finish() const;

    /// Commutative merge of a partial count map (parallel ingestion).
    void merge(const Aggregator& other);

private:
    Granularity granularity_;
    Period start_, end_;
    std::string source_;
    std::map<std::string, std::vector<std::uint64_t>> counts_;
};

std::uint64_t sum_check(const TimeSeries& series);

/// Folds a monthly series into its quarterly counterpart (used by the
/// cross-granularity consistency check).
TimeSeries fold_to_quarterly(const TimeSeries& monthly);

/// CSV: header `technology,granularity,period,count`, LF endings,
/// technologies sorted, periods ascending.
void write_series_csv(std::ostream& out, const std::map<std::string, TimeSeries>& series);
std::map<std::string, TimeSeries> read_series_csv(std::istream& in, const std::string& source = "");

}  // namespace techtrend
