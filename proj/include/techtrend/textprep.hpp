#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace techtrend {

struct Token {
    std::string surface;  // lowercased, no whitespace
    std::size_t position = 0;

    bool operator==(const Token&) const = default;
};

/// Lowercase stop words loaded from a one-word-per-line file ('#' starts a
/// comment line).
class StopList {
public:
    StopList() = default;
    explicit StopList(std::unordered_set<std::string> words) : words_(std::move(words)) {}

    static StopList load(const std::string& path);

    bool contains(std::string_view w) const {
        return words_.count(std::string(w)) > 0;
    }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

/// Splits on whitespace, lowercases, and strips leading/trailing ASCII
/// punctuation from each piece. Trailing '#' and '+' survive (c#, c++),
/// interior punctuation is never touched (node.js, vb.net, i've). Bytes
/// outside ASCII are treated as letters.
std::vector<Token> tokenize(std::string_view text);

/// Order-preserving filter; positions re-indexed densely from 0.
std::vector<Token> remove_stop_words(std::vector<Token> tokens, const StopList& stops);

/// tokenize + stop-word removal + stemming. Only purely alphabetic tokens
/// go through the stemmer; everything else passes through unchanged.
std::vector<std::string> normalize(std::string_view text, const StopList& stops);

struct Vocabulary {
    std::map<std::string, std::uint64_t> entries;
    std::uint64_t min_count = 1;
};

/// Keeps exactly the tokens with frequency >= min_count. min_count < 1 is
/// an argument error.
Vocabulary prune_by_frequency(const std::map<std::string, std::uint64_t>& counts,
                              std::uint64_t min_count);

}  // namespace techtrend
