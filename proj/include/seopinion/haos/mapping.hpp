#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seopinion/hae/hierarchy.hpp"
#include "seopinion/haos/subjectivity.hpp"

namespace seopinion::haos {

enum class Label { Positive, Negative };

std::string_view to_string(Label label);
Label label_from_string(std::string_view name);  // "positive" / "negative"; throws ParseError

struct MappedOpinion {
    std::string category;  // parent term
    std::string child;     // child term or "General"
    OpinionSentence sentence;
    std::optional<Label> polarity;

    /// The aspect the opinion is about: the child, or the parent for "General".
    [[nodiscard]] const std::string& aspect() const;
};

/// True iff a token lemma or a run of two or three adjacent lemmas equals
/// the aspect term, or some NOUN token's vector has cosine >= theta_map with
/// the aspect's vector.
bool match(std::string_view aspect, const OpinionSentence& sentence, const nlp::EmbeddingTable& embeddings,
           double theta_map);

/// For every category and sentence whose parent matches: one pair per
/// matching child, or a single "General" pair when no child matches.
/// Output is ordered by category, then sentence, then child.
std::vector<MappedOpinion> map_aspects(const hae::AspectHierarchy& h, const std::vector<OpinionSentence>& sentences,
                                       const nlp::EmbeddingTable& embeddings, double theta_map);

}  // namespace seopinion::haos
