#pragma once

#include <string>
#include <string_view>

namespace techtrend {

/// English (Porter2) Snowball stem of a lowercase word. Total function:
/// words of length <= 2 and non-alphabetic input come back unchanged apart
/// from the algorithm's own rules.
std::string stem(std::string_view word);

}  // namespace techtrend
