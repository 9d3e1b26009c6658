#include "techtrend/period.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace techtrend {

namespace {

// days since 1970-01-01 for a civil date (proleptic Gregorian)
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 + static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    out = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        out = out * 10 + (s[i] - '0');
    }
    return true;
}

}  // namespace

std::optional<UtcTimestamp> parse_timestamp(std::string_view s) {
    int y, mo, d, h, mi, sec;
    if (!read_int(s, 0, 4, y) || s.size() < 19) return std::nullopt;
    if (s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ')) return std::nullopt;
    if (!read_int(s, 5, 2, mo) || !read_int(s, 8, 2, d)) return std::nullopt;
    if (s[13] != ':' || s[16] != ':') return std::nullopt;
    if (!read_int(s, 11, 2, h) || !read_int(s, 14, 2, mi) || !read_int(s, 17, 2, sec)) return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || sec > 60) return std::nullopt;

    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    std::int64_t offset = 0;
    if (pos < s.size()) {
        char c = s[pos];
        if (c == 'Z') {
            ++pos;
        } else if (c == '+' || c == '-') {
            int oh = 0, om = 0;
            ++pos;
            if (!read_int(s, pos, 2, oh)) return std::nullopt;
            pos += 2;
            if (pos < s.size() && s[pos] == ':') ++pos;
            if (pos < s.size()) {
                if (!read_int(s, pos, 2, om)) return std::nullopt;
                pos += 2;
            }
            offset = (c == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
        } else {
            return std::nullopt;
        }
    }
    if (pos != s.size()) return std::nullopt;

    std::int64_t secs = days_from_civil(y, mo, d) * 86400LL + h * 3600LL + mi * 60LL + sec;
    return UtcTimestamp{secs - offset};
}

std::string format_timestamp(UtcTimestamp ts) {
    std::int64_t days = ts.seconds / 86400;
    std::int64_t rem = ts.seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

std::string_view to_string(Granularity g) {
    switch (g) {
        case Granularity::monthly: return "monthly";
        case Granularity::quarterly: return "quarterly";
        case Granularity::yearly: return "yearly";
    }
    return "?";
}

std::optional<Granularity> granularity_from_string(std::string_view s) {
    if (s == "monthly") return Granularity::monthly;
    if (s == "quarterly") return Granularity::quarterly;
    if (s == "yearly") return Granularity::yearly;
    return std::nullopt;
}

std::int64_t Period::linear() const {
    switch (granularity) {
        case Granularity::monthly: return static_cast<std::int64_t>(year) * 12 + (index - 1);
        case Granularity::quarterly: return static_cast<std::int64_t>(year) * 4 + (index - 1);
        case Granularity::yearly: return year;
    }
    return 0;
}

Period Period::from_linear(Granularity g, std::int64_t linear) {
    Period p;
    p.granularity = g;
    switch (g) {
        case Granularity::monthly:
            p.year = static_cast<int>(linear >= 0 ? linear / 12 : (linear - 11) / 12);
            p.index = static_cast<int>(linear - static_cast<std::int64_t>(p.year) * 12) + 1;
            break;
        case Granularity::quarterly:
            p.year = static_cast<int>(linear >= 0 ? linear / 4 : (linear - 3) / 4);
            p.index = static_cast<int>(linear - static_cast<std::int64_t>(p.year) * 4) + 1;
            break;
        case Granularity::yearly:
            p.year = static_cast<int>(linear);
            p.index = 1;
            break;
    }
    return p;
}

Period Period::next() const { return from_linear(granularity, linear() + 1); }

std::string Period::str() const {
    char buf[16];
    switch (granularity) {
        case Granularity::monthly:
            std::snprintf(buf, sizeof buf, "%04d-%02d", year, index);
            break;
        case Granularity::quarterly:
            std::snprintf(buf, sizeof buf, "%04dQ%d", year, index);
            break;
        case Granularity::yearly:
            std::snprintf(buf, sizeof buf, "%04d", year);
            break;
    }
    return buf;
}

Period bucket_period(UtcTimestamp ts, Granularity g) {
    std::int64_t days = ts.seconds / 86400;
    if (ts.seconds % 86400 < 0) --days;
    int y, m, d;
    civil_from_days(days, y, m, d);
    switch (g) {
        case Granularity::monthly: return {g, y, m};
        case Granularity::quarterly: return {g, y, (m - 1) / 3 + 1};
        case Granularity::yearly: return {g, y, 1};
    }
    return {};
}

std::optional<Period> parse_period(std::string_view s) {
    int year = 0, idx = 0;
    if (s.size() == 7 && s[4] == '-' && read_int(s, 0, 4, year) && read_int(s, 5, 2, idx)) {
        if (idx >= 1 && idx <= 12) return Period{Granularity::monthly, year, idx};
        return std::nullopt;
    }
    if (s.size() == 6 && s[4] == 'Q' && read_int(s, 0, 4, year) && read_int(s, 5, 1, idx)) {
        if (idx >= 1 && idx <= 4) return Period{Granularity::quarterly, year, idx};
        return std::nullopt;
    }
    if (s.size() == 4 && read_int(s, 0, 4, year)) return Period{Granularity::yearly, year, 1};
    return std::nullopt;
}

std::int64_t period_span(Period first, Period last) {
    if (last < first) return 0;
    return last.linear() - first.linear() + 1;
}

}  // namespace techtrend
