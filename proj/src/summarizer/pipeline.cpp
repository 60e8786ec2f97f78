#include "seopinion/summarizer/pipeline.hpp"

#include "seopinion/error.hpp"

namespace seopinion::summary {

ProductResult summarize_record(const ingest::ProductRecord& record, const hae::AspectHierarchy& h,
                               const nlp::Toolkit& kit, const PipelineConfig& config) {
    ProductResult out;
    auto opinions = haos::detect_subjectivity(record.reviews, kit, config.theta_subj, record.product_id);
    out.pairs = haos::map_aspects(h, opinions, kit.embeddings, config.theta_map);
    haos::classify_all(out.pairs, config.model, kit);
    out.summary = summarize_product(h, out.pairs, record.product_id, record.title, record.site_id);
    return out;
}

PipelineResult run_pipeline(const ingest::Corpus& corpus, const nlp::Toolkit& kit, const PipelineConfig& config) {
    if (corpus.records.empty()) throw ValidationError("corpus has no records");
    PipelineResult out;
    out.hierarchy = hae::extract_hierarchy(corpus, kit, config.hae);
    for (const auto& rec : corpus.records) out.products.push_back(summarize_record(rec, out.hierarchy, kit, config));
    return out;
}

}  // namespace seopinion::summary
