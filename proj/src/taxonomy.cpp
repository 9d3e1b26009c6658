#include "techtrend/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include <json.hpp>

#include "techtrend/errors.hpp"

namespace techtrend {

namespace {

bool known_area(std::string_view area) {
    for (std::string_view a : kKnowledgeAreas)
        if (a == area) return true;
    return false;
}

// single token without punctuation: eligible for body-stem matching
bool body_matchable(std::string_view kw) {
    for (char c : kw)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return !kw.empty();
}

std::string canonical_language(std::string_view lang) {
    std::size_t b = 0, e = lang.size();
    while (b < e && std::isspace(static_cast<unsigned char>(lang[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(lang[e - 1]))) --e;
    std::string out(lang.substr(b, e - b));
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

Taxonomy::Taxonomy(std::vector<Technology> technologies) : techs_(std::move(technologies)) {
    std::set<std::string> ids;
    // keyword uniqueness is scoped to one knowledge area
    std::unordered_map<std::string, std::unordered_map<std::string, std::string>> area_keywords;

    for (std::uint32_t idx = 0; idx < techs_.size(); ++idx) {
        const Technology& t = techs_[idx];
        if (!known_area(t.knowledge_area))
            throw TaxonomyError("unknown knowledge_area '" + t.knowledge_area + "' on technology '" + t.id + "'");
        if (!ids.insert(t.id).second)
            throw TaxonomyError("duplicate technology id '" + t.id + "'");
        if (t.keywords.empty())
            throw TaxonomyError("technology '" + t.id + "' has no keywords");

        bool id_is_member = std::find(t.keywords.begin(), t.keywords.end(), t.id) != t.keywords.end()
            || std::find(t.language_aliases.begin(), t.language_aliases.end(), t.id) != t.language_aliases.end();
        if (!id_is_member)
            throw TaxonomyError("technology id '" + t.id + "' is not one of its keywords or aliases");

        auto& seen = area_keywords[t.knowledge_area];
        for (const std::string& kw : t.keywords) {
            auto [it, fresh] = seen.emplace(kw, t.id);
            if (!fresh)
                throw TaxonomyError("keyword '" + kw + "' claimed by both '" + it->second + "' and '" + t.id
                                    + "' in knowledge area " + t.knowledge_area);
            keyword_index_[kw].push_back(idx);
            if (body_matchable(kw)) body_index_[kw].push_back(idx);
        }
        for (const std::string& alias : t.language_aliases) {
            auto [it, fresh] = alias_index_.emplace(alias, idx);
            if (!fresh)
                throw TaxonomyError("language alias '" + alias + "' claimed by both '"
                                    + techs_[it->second].id + "' and '" + t.id + "'");
        }
    }
}

const Technology* Taxonomy::find(std::string_view id) const {
    for (const Technology& t : techs_)
        if (t.id == id) return &t;
    return nullptr;
}

const std::vector<std::uint32_t>* Taxonomy::lookup_keyword(std::string_view keyword) const {
    auto it = keyword_index_.find(std::string(keyword));
    return it == keyword_index_.end() ? nullptr : &it->second;
}

std::optional<std::uint32_t> Taxonomy::lookup_language_alias(std::string_view alias) const {
    auto it = alias_index_.find(std::string(alias));
    if (it == alias_index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::uint32_t>* Taxonomy::lookup_body_keyword(std::string_view stem) const {
    auto it = body_index_.find(std::string(stem));
    return it == body_index_.end() ? nullptr : &it->second;
}

Taxonomy load_taxonomy(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TaxonomyError("cannot open taxonomy file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw TaxonomyError("invalid taxonomy file " + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("technologies") || !doc["technologies"].is_array())
        throw TaxonomyError("taxonomy file " + path + " lacks a top-level 'technologies' array");

    std::vector<Technology> techs;
    for (const auto& entry : doc["technologies"]) {
        Technology t;
        try {
            t.id = entry.at("id").get<std::string>();
            t.display_name = entry.value("display_name", t.id);
            t.knowledge_area = entry.at("knowledge_area").get<std::string>();
            t.keywords = entry.at("keywords").get<std::vector<std::string>>();
            if (entry.contains("language_aliases"))
                t.language_aliases = entry["language_aliases"].get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& e) {
            throw TaxonomyError("malformed technology entry in " + path + ": " + e.what());
        }
        techs.push_back(std::move(t));
    }
    return Taxonomy(std::move(techs));
}

std::vector<std::string> classify_post(const Post& post, const Taxonomy& taxonomy,
                                       bool use_body, const StopList& stops) {
    std::set<std::uint32_t> hits;
    for (const std::string& tag : post.tags)
        if (const auto* idxs = taxonomy.lookup_keyword(tag))
            hits.insert(idxs->begin(), idxs->end());

    if (use_body && !post.body.empty()) {
        for (const std::string& stem : normalize(post.body, stops))
            if (const auto* idxs = taxonomy.lookup_body_keyword(stem))
                hits.insert(idxs->begin(), idxs->end());
    }

    std::vector<std::string> ids;
    ids.reserve(hits.size());
    for (std::uint32_t idx : hits) ids.push_back(taxonomy.technologies()[idx].id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> classify_event(const Event& event, const Taxonomy& taxonomy) {
    if (!event.repository_language) return {};
    std::string lang = canonical_language(*event.repository_language);
    if (lang.empty()) return {};
    if (auto idx = taxonomy.lookup_language_alias(lang))
        return {taxonomy.technologies()[*idx].id};
    return {};
}

}  // namespace techtrend
