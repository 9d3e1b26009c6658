#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace techtrend {

/// Container-level corruption in an input stream. Carries the byte offset
/// where parsing became impossible.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::uint64_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::uint64_t byte_offset() const { return byte_offset_; }

private:
    std::uint64_t byte_offset_;
};

/// A series is too short for the requested model.
class InsufficientDataError : public std::runtime_error {
public:
    InsufficientDataError(std::size_t have, std::size_t need)
        : std::runtime_error("not enough data points to make prediction (have "
                             + std::to_string(have) + ", need " + std::to_string(need) + ")"),
          have_(have), need_(need) {}

    std::size_t have() const { return have_; }
    std::size_t need() const { return need_; }

private:
    std::size_t have_;
    std::size_t need_;
};

/// Second writer tried to open a record store.
class StoreLockError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid taxonomy file contents.
class TaxonomyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace techtrend
