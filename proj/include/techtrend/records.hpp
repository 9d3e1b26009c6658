#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "techtrend/period.hpp"

namespace techtrend {

/// One StackExchange question or answer.
struct Post {
    std::int64_t id = 0;
    int post_type = 0;  // 1=question, 2=answer
    UtcTimestamp creation_date;
    std::string body;
    std::vector<std::string> tags;  // lowercase, no angle brackets
    std::optional<std::string> title;
};

/// One GitHub archive event.
struct Event {
    std::string id;
    std::string event_type;
    UtcTimestamp created_at;
    std::optional<std::string> repository_language;  // never empty string
};

}  // namespace techtrend
