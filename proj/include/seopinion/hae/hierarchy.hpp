#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "seopinion/hae/clustering.hpp"

namespace seopinion::hae {

inline constexpr std::string_view kGeneral = "General";

struct Category {
    AspectTerm parent;
    std::vector<AspectTerm> children;  // sorted by term; "General" is implicit
    int support = 0;                   // summed over parent and children

    [[nodiscard]] bool has_child(std::string_view child) const;  // true for "General"
    /// Child names as presented: sorted terms, then "General".
    [[nodiscard]] std::vector<std::string> child_names() const;

    bool operator==(const Category&) const = default;
};

struct AspectHierarchy {
    std::string product_type;
    std::vector<Category> categories;  // descending support, then parent term

    [[nodiscard]] const Category* find(std::string_view parent) const;
    [[nodiscard]] std::size_t aspect_count() const;

    bool operator==(const AspectHierarchy&) const = default;
};

/// Mean similarity of each member to the others; the medoid is the maximum,
/// ties (within 1e-12) going to higher support, then the smaller term.
std::size_t medoid_index(const AspectCluster& cluster, const TermSpace& space);

AspectHierarchy build_hierarchy(const std::vector<AspectCluster>& clusters, std::string product_type,
                                const TermSpace& space);

/// Phase A end to end: collect, select, cluster, build.
AspectHierarchy extract_hierarchy(const ingest::Corpus& corpus, const nlp::Toolkit& kit, const HaeParams& params);

nlohmann::ordered_json to_json(const AspectHierarchy& h);
AspectHierarchy hierarchy_from_json(const nlohmann::ordered_json& j);  // throws SchemaError

}  // namespace seopinion::hae
