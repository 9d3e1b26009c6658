#include "techtrend/porter2.hpp"

#include <array>
#include <cstring>

// English Snowball ("Porter2") stemmer. Follows the published algorithm
// exactly: Y marking, gener/commun/arsen region prefixes, the two
// exception lists, and longest-suffix-first rule tables whose region
// conditions are checked only after the longest match is chosen.

namespace techtrend {

namespace {

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(const std::string& w, std::string_view sfx) {
    return w.size() >= sfx.size() && std::memcmp(w.data() + w.size() - sfx.size(), sfx.data(), sfx.size()) == 0;
}

bool is_double(char a, char b) {
    if (a != b) return false;
    switch (a) {
        case 'b': case 'd': case 'f': case 'g': case 'm':
        case 'n': case 'p': case 'r': case 't': return true;
        default: return false;
    }
}

bool valid_li_ending(char c) {
    switch (c) {
        case 'c': case 'd': case 'e': case 'g': case 'h':
        case 'k': case 'm': case 'n': case 'r': case 't': return true;
        default: return false;
    }
}

// does w[0..n) end in a short syllable?
bool ends_in_short_syllable(const std::string& w, std::size_t n) {
    if (n >= 3) {
        char a = w[n - 3], b = w[n - 2], c = w[n - 1];
        if (!is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' && c != 'x' && c != 'Y')
            return true;
    }
    if (n == 2 && is_vowel(w[0]) && !is_vowel(w[1])) return true;
    return false;
}

// index of the first non-vowel after the first vowel in w[from..), or
// w.size() when there is none
std::size_t region_after(const std::string& w, std::size_t from) {
    std::size_t i = from;
    while (i < w.size() && !is_vowel(w[i])) ++i;
    while (i < w.size() && is_vowel(w[i])) ++i;
    return i < w.size() ? i + 1 : w.size();
}

struct Exception {
    std::string_view word;
    std::string_view stem;
};

constexpr std::array<Exception, 18> kException1 = {{
    {"skis", "ski"},     {"skies", "sky"},    {"dying", "die"},
    {"lying", "lie"},    {"tying", "tie"},    {"idly", "idl"},
    {"gently", "gentl"}, {"ugly", "ugli"},    {"early", "earli"},
    {"only", "onli"},    {"singly", "singl"}, {"sky", "sky"},
    {"news", "news"},    {"howe", "howe"},    {"atlas", "atlas"},
    {"cosmos", "cosmos"}, {"bias", "bias"},   {"andes", "andes"},
}};

constexpr std::array<std::string_view, 8> kException2 = {
    "inning", "outing", "canning", "herring",
    "earring", "proceed", "exceed", "succeed",
};

struct Stemmer {
    std::string w;
    std::size_t p1 = 0;
    std::size_t p2 = 0;

    bool in_r1(std::size_t pos) const { return pos >= p1; }
    bool in_r2(std::size_t pos) const { return pos >= p2; }

    bool contains_vowel(std::size_t from, std::size_t to) const {
        for (std::size_t i = from; i < to; ++i)
            if (is_vowel(w[i])) return true;
        return false;
    }

    void mark_regions() {
        p1 = p2 = w.size();
        std::size_t start = 0;
        if (w.rfind("gener", 0) == 0) start = 5;
        else if (w.rfind("commun", 0) == 0) start = 6;
        else if (w.rfind("arsen", 0) == 0) start = 5;
        p1 = start > 0 ? start : region_after(w, 0);
        p2 = region_after(w, p1);
    }

    void mark_ys() {
        if (!w.empty() && w[0] == 'y') w[0] = 'Y';
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == 'y' && is_vowel(w[i - 1])) w[i] = 'Y';
    }

    void step0() {
        for (std::string_view sfx : {"'s'", "'s", "'"}) {
            if (ends_with(w, sfx)) {
                w.resize(w.size() - sfx.size());
                return;
            }
        }
    }

    void step1a() {
        if (ends_with(w, "sses")) {
            w.resize(w.size() - 2);
            return;
        }
        if (ends_with(w, "ied") || ends_with(w, "ies")) {
            if (w.size() > 4)
                w.resize(w.size() - 2);
            else
                w.resize(w.size() - 1);
            return;
        }
        if (ends_with(w, "us") || ends_with(w, "ss")) return;
        if (ends_with(w, "s")) {
            // keep the s unless a vowel occurs before the preceding char
            if (w.size() >= 3 && contains_vowel(0, w.size() - 2))
                w.resize(w.size() - 1);
        }
    }

    void step1b() {
        static constexpr std::array<std::string_view, 6> sfxs = {
            "eedly", "ingly", "edly", "ing", "eed", "ed"};
        for (std::string_view sfx : sfxs) {
            if (!ends_with(w, sfx)) continue;
            std::size_t pos = w.size() - sfx.size();
            if (sfx == "eed" || sfx == "eedly") {
                if (in_r1(pos)) w.replace(pos, sfx.size(), "ee");
                return;
            }
            if (!contains_vowel(0, pos)) return;
            w.resize(pos);
            if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
                w += 'e';
            } else if (w.size() >= 2 && is_double(w[w.size() - 2], w[w.size() - 1])) {
                w.pop_back();
            } else if (p1 >= w.size() && ends_in_short_syllable(w, w.size())) {
                w += 'e';
            }
            return;
        }
    }

    void step1c() {
        if (w.size() < 3) return;
        char last = w[w.size() - 1];
        if ((last == 'y' || last == 'Y') && !is_vowel(w[w.size() - 2]))
            w[w.size() - 1] = 'i';
    }

    struct Rule {
        std::string_view suffix;
        std::string_view replacement;
        int condition;  // 0 none, 1 preceded by 'l', 2 valid li-ending, 3 in R2
    };

    // applies the longest matching rule whose suffix starts in R1; the
    // condition is only consulted after the longest match is fixed
    void apply_rules(std::initializer_list<Rule> rules) {
        const Rule* best = nullptr;
        for (const Rule& r : rules)
            if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
                best = &r;
        if (!best) return;
        std::size_t pos = w.size() - best->suffix.size();
        if (!in_r1(pos)) return;
        switch (best->condition) {
            case 1:
                if (pos == 0 || w[pos - 1] != 'l') return;
                break;
            case 2:
                if (pos == 0 || !valid_li_ending(w[pos - 1])) return;
                break;
            case 3:
                if (!in_r2(pos)) return;
                break;
        }
        w.replace(pos, best->suffix.size(), best->replacement);
    }

    void step2() {
        apply_rules({
            {"tional", "tion", 0}, {"enci", "ence", 0},   {"anci", "ance", 0},
            {"abli", "able", 0},   {"entli", "ent", 0},   {"izer", "ize", 0},
            {"ization", "ize", 0}, {"ational", "ate", 0}, {"ation", "ate", 0},
            {"ator", "ate", 0},    {"alism", "al", 0},    {"aliti", "al", 0},
            {"alli", "al", 0},     {"fulness", "ful", 0}, {"ousli", "ous", 0},
            {"ousness", "ous", 0}, {"iveness", "ive", 0}, {"iviti", "ive", 0},
            {"biliti", "ble", 0},  {"bli", "ble", 0},     {"ogi", "og", 1},
            {"fulli", "ful", 0},   {"lessli", "less", 0}, {"li", "", 2},
        });
    }

    void step3() {
        apply_rules({
            {"tional", "tion", 0}, {"ational", "ate", 0}, {"alize", "al", 0},
            {"icate", "ic", 0},    {"iciti", "ic", 0},    {"ical", "ic", 0},
            {"ful", "", 0},        {"ness", "", 0},       {"ative", "", 3},
        });
    }

    void step4() {
        static constexpr std::array<std::string_view, 18> sfxs = {
            "ement", "ance", "ence", "able", "ible", "ment", "ent", "ant",
            "ism",   "ate",  "iti",  "ous",  "ive",  "ize",  "ion", "al",
            "er",    "ic"};
        const std::string_view* best = nullptr;
        for (const auto& sfx : sfxs)
            if (ends_with(w, sfx) && (!best || sfx.size() > best->size()))
                best = &sfx;
        if (!best) return;
        std::size_t pos = w.size() - best->size();
        if (!in_r2(pos)) return;
        if (*best == "ion" && (pos == 0 || (w[pos - 1] != 's' && w[pos - 1] != 't'))) return;
        w.resize(pos);
    }

    void step5() {
        if (ends_with(w, "e")) {
            std::size_t pos = w.size() - 1;
            if (in_r2(pos) || (in_r1(pos) && !ends_in_short_syllable(w, pos)))
                w.pop_back();
            return;
        }
        if (ends_with(w, "l")) {
            std::size_t pos = w.size() - 1;
            if (in_r2(pos) && pos > 0 && w[pos - 1] == 'l') w.pop_back();
        }
    }

    void unmark_ys() {
        for (char& c : w)
            if (c == 'Y') c = 'y';
    }
};

}  // namespace

std::string stem(std::string_view word) {
    for (const Exception& e : kException1)
        if (word == e.word) return std::string(e.stem);
    if (word.size() <= 2) return std::string(word);

    Stemmer st;
    st.w.assign(word);
    if (st.w[0] == '\'') st.w.erase(0, 1);
    st.mark_ys();
    st.mark_regions();

    st.step0();
    st.step1a();

    for (std::string_view e : kException2)
        if (st.w == e) return st.w;

    st.step1b();
    st.step1c();
    st.step2();
    st.step3();
    st.step4();
    st.step5();
    st.unmark_ys();
    return st.w;
}

}  // namespace techtrend
