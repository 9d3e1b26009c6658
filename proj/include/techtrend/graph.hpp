#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "techtrend/period.hpp"
#include "techtrend/series.hpp"

namespace techtrend {

/// Yearly technology co-occurrence graph. Node weight counts records
/// mentioning the technology that year; an edge weight counts records
/// mentioning both endpoints. No self-loops; edge keys are ordered a < b.
struct CooccurrenceGraph {
    int year = 0;
    struct Node {
        std::string label;
        std::uint64_t weight = 0;
    };
    std::map<std::string, Node> nodes;
    std::map<std::pair<std::string, std::string>, std::uint64_t> edges;
};

/// Counts one year of classified records. `label_of` resolves display
/// names; ids inside one record are assumed unique (classification emits
/// sets).
CooccurrenceGraph build_cooccurrence(const std::vector<ClassifiedRecord>& records, int year,
                                     const std::function<std::string(const std::string&)>& label_of);

/// GDF text, bit-exact:
///   nodedef>name VARCHAR,label VARCHAR,weight DOUBLE
///   <id>,<label>,<weight>.0        (sorted by id)
///   edgedef>node1 VARCHAR,node2 VARCHAR,weight DOUBLE
///   <a>,<b>,<weight>.0             (a < b, sorted by (a,b))
/// LF endings, trailing newline; labels containing commas are quoted with
/// single quotes.
std::string export_gdf(const CooccurrenceGraph& graph);

}  // namespace techtrend
