#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seopinion/haos/mapping.hpp"

namespace seopinion::summary {

struct AspectSummary {
    std::string aspect;
    int n_sentences = 0;
    int n_pos = 0;
    int n_neg = 0;
    std::optional<double> rating;         // unset when n_sentences == 0
    std::vector<AspectSummary> children;  // empty at leaf level

    bool operator==(const AspectSummary&) const = default;
};

struct ProductSummary {
    std::string product_id;
    std::string title;
    std::string site_id;
    std::vector<AspectSummary> categories;
    int total_sentences = 0;       // a sentence under k categories counts k times
    std::optional<double> rating;  // over all mapped sentences

    bool operator==(const ProductSummary&) const = default;
};

/// (5 * n_pos + n_neg) / (n_pos + n_neg). Throws EmptyAspect when both are 0.
double aspect_rating(int n_pos, int n_neg);

/// Tallies classified pairs per child, rolls up to categories and rates
/// them. Every category and child of `h` is present, zero counts included.
/// Children are ordered by descending sentence count, then name; categories
/// by descending sentence count, ties keeping hierarchy order. Throws
/// ValidationError for an unclassified pair or one outside the hierarchy.
ProductSummary summarize_product(const hae::AspectHierarchy& h, const std::vector<haos::MappedOpinion>& pairs,
                                 std::string product_id = {}, std::string title = {}, std::string site_id = {});

nlohmann::ordered_json to_json(const AspectSummary& s);
nlohmann::ordered_json to_json(const ProductSummary& s);
ProductSummary product_summary_from_json(const nlohmann::ordered_json& j);  // throws SchemaError

}  // namespace seopinion::summary
