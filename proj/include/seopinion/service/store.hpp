#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "seopinion/summarizer/pipeline.hpp"

namespace seopinion::service {

struct SentenceItem {
    std::string text;
    haos::Label polarity = haos::Label::Positive;

    bool operator==(const SentenceItem&) const = default;
};

using SentenceKey = std::tuple<std::string, std::string, std::string>;  // product, category, child

/// The immutable output of one pipeline run, as served over HTTP.
struct SummaryStore {
    hae::AspectHierarchy hierarchy;
    std::vector<summary::ProductSummary> products;  // corpus order
    std::map<SentenceKey, std::vector<SentenceItem>> sentences;

    [[nodiscard]] const summary::ProductSummary* product(std::string_view id) const;
    /// Sentences under an aspect; empty when none were mapped there.
    [[nodiscard]] std::vector<SentenceItem> sentences_for(const std::string& product_id, const std::string& category,
                                                          const std::string& child) const;

    bool operator==(const SummaryStore&) const = default;
};

SummaryStore make_store(const summary::PipelineResult& result);

/// {hierarchy, products, sentences: [{product_id, category, child, items: [{text, polarity}]}]}.
/// Deterministic: no timestamps, map-ordered sentence groups.
nlohmann::ordered_json to_json(const SummaryStore& store);
/// Throws SchemaError, including for sentence keys outside the hierarchy.
SummaryStore store_from_json(const nlohmann::ordered_json& j);

std::string serialize_store(const SummaryStore& store);
SummaryStore parse_store(std::string_view text);
void save_store(const SummaryStore& store, const std::filesystem::path& path);  // write-then-rename
SummaryStore load_store(const std::filesystem::path& path);

}  // namespace seopinion::service
