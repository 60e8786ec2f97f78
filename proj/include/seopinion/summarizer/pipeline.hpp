#pragma once

#include <vector>

#include "seopinion/haos/polarity.hpp"
#include "seopinion/ingestion/corpus.hpp"
#include "seopinion/summarizer/summary.hpp"

namespace seopinion::summary {

struct PipelineConfig {
    hae::HaeParams hae;
    double theta_subj = 0.1;
    double theta_map = 0.7;
    haos::PolarityModel model;  // lexicon baseline unless a trained model is supplied
};

struct ProductResult {
    ProductSummary summary;
    std::vector<haos::MappedOpinion> pairs;  // classified
};

struct PipelineResult {
    hae::AspectHierarchy hierarchy;  // shared by every product
    std::vector<ProductResult> products;
};

/// Phase A once over all records' details, then Phase B per product.
/// Throws ValidationError on an empty corpus; EmptyAspectSet from Phase A.
PipelineResult run_pipeline(const ingest::Corpus& corpus, const nlp::Toolkit& kit, const PipelineConfig& config);

/// Phase B alone, for a fixed hierarchy.
ProductResult summarize_record(const ingest::ProductRecord& record, const hae::AspectHierarchy& h,
                               const nlp::Toolkit& kit, const PipelineConfig& config);

}  // namespace seopinion::summary
