#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "techtrend/records.hpp"
#include "techtrend/textprep.hpp"

namespace techtrend {

inline constexpr std::string_view kKnowledgeAreas[] = {
    "programming-languages", "databases", "cloud-services", "mobile-os"};

/// One technology: a slug id, its knowledge area, the tag-form keyword set
/// used against StackExchange tags, and the alias set matched against
/// GitHub repository_language values.
struct Technology {
    std::string id;
    std::string display_name;
    std::string knowledge_area;
    std::vector<std::string> keywords;
    std::vector<std::string> language_aliases;
};

class Taxonomy {
public:
    explicit Taxonomy(std::vector<Technology> technologies);

    const std::vector<Technology>& technologies() const { return techs_; }
    const Technology* find(std::string_view id) const;

    /// Technologies whose keyword set contains the tag; ids from every
    /// knowledge area (cross-area keyword overlap is legal).
    const std::vector<std::uint32_t>* lookup_keyword(std::string_view keyword) const;

    /// Programming-language technology matching a GitHub language alias.
    std::optional<std::uint32_t> lookup_language_alias(std::string_view alias) const;

    /// Single-token, punctuation-free keywords usable for body matching.
    const std::vector<std::uint32_t>* lookup_body_keyword(std::string_view stem) const;

private:
    std::vector<Technology> techs_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> keyword_index_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> body_index_;
    std::unordered_map<std::string, std::uint32_t> alias_index_;
};

/// Loads and validates the taxonomy file (JSON with a top-level
/// `technologies` array). Throws TaxonomyError naming the offending entry
/// on unknown knowledge areas, duplicate ids, or duplicate keywords within
/// one knowledge area.
Taxonomy load_taxonomy(const std::string& path);

/// Set of matching technology ids in sorted order. A technology matches
/// when one of the post's tags is among its keywords; with use_body also
/// when a normalized body stem equals one of its single-token keywords.
std::vector<std::string> classify_post(const Post& post, const Taxonomy& taxonomy,
                                       bool use_body, const StopList& stops);

/// At most one programming language, via repository_language.
std::vector<std::string> classify_event(const Event& event, const Taxonomy& taxonomy);

}  // namespace techtrend
