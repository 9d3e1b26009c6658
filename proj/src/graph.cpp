#include "techtrend/graph.hpp"

namespace techtrend {

CooccurrenceGraph build_cooccurrence(const std::vector<ClassifiedRecord>& records, int year,
                                     const std::function<std::string(const std::string&)>& label_of) {
    CooccurrenceGraph g;
    g.year = year;
    for (const ClassifiedRecord& rec : records) {
        if (rec.technology_ids.empty()) continue;
        if (bucket_period(rec.timestamp, Granularity::yearly).year != year) continue;

        const auto& ids = rec.technology_ids;
        for (const std::string& id : ids) {
            auto [it, fresh] = g.nodes.try_emplace(id);
            if (fresh) it->second.label = label_of(id);
            ++it->second.weight;
        }
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                auto key = ids[i] < ids[j] ? std::make_pair(ids[i], ids[j])
                                           : std::make_pair(ids[j], ids[i]);
                if (key.first == key.second) continue;
                ++g.edges[key];
            }
    }
    return g;
}

namespace {

std::string gdf_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "'" + s + "'";
}

}  // namespace

std::string export_gdf(const CooccurrenceGraph& graph) {
    std::string out;
    out += "nodedef>name VARCHAR,label VARCHAR,weight DOUBLE\n";
    for (const auto& [id, node] : graph.nodes) {
        out += gdf_field(id);
        out += ',';
        out += gdf_field(node.label);
        out += ',';
        out += std::to_string(node.weight);
        out += ".0\n";
    }
    out += "edgedef>node1 VARCHAR,node2 VARCHAR,weight DOUBLE\n";
    for (const auto& [pair, weight] : graph.edges) {
        out += gdf_field(pair.first);
        out += ',';
        out += gdf_field(pair.second);
        out += ',';
        out += std::to_string(weight);
        out += ".0\n";
    }
    return out;
}

}  // namespace techtrend
