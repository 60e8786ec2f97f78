#include "seopinion/haos/mapping.hpp"

#include "seopinion/error.hpp"

namespace seopinion::haos {

std::string_view to_string(Label label) { return label == Label::Positive ? "positive" : "negative"; }

Label label_from_string(std::string_view name) {
    if (name == "positive") return Label::Positive;
    if (name == "negative") return Label::Negative;
    throw ParseError("unknown polarity '" + std::string(name) + "'");
}

const std::string& MappedOpinion::aspect() const { return child == hae::kGeneral ? category : child; }

bool match(std::string_view aspect, const OpinionSentence& sentence, const nlp::EmbeddingTable& embeddings,
           double theta_map) {
    const auto& toks = sentence.tagged.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        std::string gram;
        for (std::size_t n = 0; n < 3 && i + n < toks.size(); ++n) {
            if (n) gram += ' ';
            gram += toks[i + n].lemma;
            if (gram == aspect) return true;
        }
    }
    auto target = nlp::embed_phrase(embeddings, aspect);
    if (target.oov) return false;
    for (const auto& t : toks) {
        if (t.tag != nlp::Tag::Noun) continue;
        auto v = nlp::embed_phrase(embeddings, t.lemma);
        if (!v.oov && nlp::similarity(v.vector, target.vector) >= theta_map) return true;
    }
    return false;
}

std::vector<MappedOpinion> map_aspects(const hae::AspectHierarchy& h, const std::vector<OpinionSentence>& sentences,
                                       const nlp::EmbeddingTable& embeddings, double theta_map) {
    std::vector<MappedOpinion> out;
    for (const auto& cat : h.categories) {
        for (const auto& o : sentences) {
            if (!match(cat.parent.term, o, embeddings, theta_map)) continue;
            bool any = false;
            for (const auto& child : cat.children) {
                if (!match(child.term, o, embeddings, theta_map)) continue;
                out.push_back({cat.parent.term, child.term, o, std::nullopt});
                any = true;
            }
            if (!any) out.push_back({cat.parent.term, std::string(hae::kGeneral), o, std::nullopt});
        }
    }
    return out;
}

}  // namespace seopinion::haos
