#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace techtrend {

/// Seconds since the Unix epoch, always UTC.
struct UtcTimestamp {
    std::int64_t seconds = 0;

    auto operator<=>(const UtcTimestamp&) const = default;
};

/// Parses an ISO-8601 timestamp. Accepted forms:
///   2009-01-25T15:25:00            (no zone: interpreted as UTC)
///   2009-01-25T15:25:00.000        (fraction dropped)
///   2014-01-03T10:00:00Z
///   2014-01-03T10:00:00+02:00      (converted to UTC)
/// Returns nullopt on anything else.
std::optional<UtcTimestamp> parse_timestamp(std::string_view text);

std::string format_timestamp(UtcTimestamp ts);

enum class Granularity { monthly, quarterly, yearly };

std::string_view to_string(Granularity g);
std::optional<Granularity> granularity_from_string(std::string_view s);

/// One calendar bucket: a month (index 1-12), a quarter (1-4) or a year
/// (index fixed at 1). Totally ordered by (year, index) within one
/// granularity.
struct Period {
    Granularity granularity = Granularity::monthly;
    int year = 0;
    int index = 1;

    auto operator<=>(const Period&) const = default;

    /// Position on the granularity's global axis; consecutive periods
    /// differ by exactly 1.
    std::int64_t linear() const;

    Period next() const;

    /// "2014-01" / "2014Q1" / "2014"
    std::string str() const;

    static Period from_linear(Granularity g, std::int64_t linear);
};

/// Calendar bucketing in UTC. Quarters are Jan-Mar=Q1 ... Oct-Dec=Q4.
Period bucket_period(UtcTimestamp ts, Granularity g);

/// Parses the formats produced by Period::str().
std::optional<Period> parse_period(std::string_view s);

/// Number of periods in [first, last], or 0 when last < first.
std::int64_t period_span(Period first, Period last);

}  // namespace techtrend
