#include "techtrend/textprep.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include "techtrend/porter2.hpp"

namespace techtrend {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// ASCII punctuation; bytes >= 0x80 count as letters
bool is_punct(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 0x80 && !std::isalnum(u);
}

bool is_all_alpha(std::string_view s) {
    for (char c : s)
        if (c < 'a' || c > 'z') return false;
    return !s.empty();
}

}  // namespace

StopList StopList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stop list: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (is_space(line.back()) || line.back() == '\0')) line.pop_back();
        std::size_t b = 0;
        while (b < line.size() && is_space(line[b])) ++b;
        if (b > 0) line.erase(0, b);
        if (line.empty() || line[0] == '#') continue;
        for (char& c : line) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        words.insert(line);
    }
    return StopList(std::move(words));
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i == start) break;

        std::size_t b = start, e = i;
        while (b < e && is_punct(text[b])) ++b;
        while (e > b && is_punct(text[e - 1]) && text[e - 1] != '#' && text[e - 1] != '+') --e;
        if (b == e) continue;

        std::string piece(text.substr(b, e - b));
        for (char& c : piece)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        out.push_back(Token{std::move(piece), out.size()});
    }
    return out;
}

std::vector<Token> remove_stop_words(std::vector<Token> tokens, const StopList& stops) {
    std::vector<Token> out;
    out.reserve(tokens.size());
    for (Token& t : tokens) {
        if (stops.contains(t.surface)) continue;
        t.position = out.size();
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::string> normalize(std::string_view text, const StopList& stops) {
    std::vector<Token> tokens = remove_stop_words(tokenize(text), stops);
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (Token& t : tokens) {
        if (is_all_alpha(t.surface))
            out.push_back(stem(t.surface));
        else
            out.push_back(std::move(t.surface));
    }
    return out;
}

Vocabulary prune_by_frequency(const std::map<std::string, std::uint64_t>& counts,
                              std::uint64_t min_count) {
    if (min_count < 1) throw std::invalid_argument("prune_by_frequency: min_count must be >= 1");
    Vocabulary v;
    v.min_count = min_count;
    for (const auto& [token, freq] : counts)
        if (freq >= min_count) v.entries.emplace(token, freq);
    return v;
}

}  // namespace techtrend
