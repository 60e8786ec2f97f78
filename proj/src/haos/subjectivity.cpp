#include "seopinion/haos/subjectivity.hpp"

#include <algorithm>

#include "seopinion/error.hpp"
#include "seopinion/nlp/text.hpp"

namespace seopinion::haos {

using nlp::Tag;

nlp::Polarity token_score(const nlp::SentimentLexicon& lexicon, const nlp::Token& token) {
    if (lexicon.contains(token.lemma)) return lexicon.score(token.lemma);
    return lexicon.score(nlp::to_lower(token.surface));
}

std::optional<OpinionSentence> score_sentence(const std::string& sentence, const nlp::Toolkit& kit,
                                              double theta_subj) {
    OpinionSentence o;
    o.text = sentence;
    o.tagged = kit.analyze(sentence);
    if (!o.tagged.has(Tag::Noun) || !o.tagged.has(Tag::Adj)) return std::nullopt;
    int n = 0;
    for (const auto& t : o.tagged.tokens) {
        if (t.tag != Tag::Noun && t.tag != Tag::Adj) continue;
        auto s = token_score(kit.lexicon, t);
        o.pos_score += s.pos;
        o.neg_score += s.neg;
        ++n;
    }
    o.norm_pos = o.pos_score / n;
    o.norm_neg = o.neg_score / n;
    if (std::max(o.norm_pos, o.norm_neg) <= theta_subj) return std::nullopt;
    return o;
}

std::vector<OpinionSentence> detect_subjectivity(const std::vector<std::string>& reviews, const nlp::Toolkit& kit,
                                                 double theta_subj, const std::string& product_id) {
    if (!(theta_subj >= 0.0 && theta_subj < 1.0)) throw ValidationError("theta_subj must lie in [0, 1)");
    std::vector<OpinionSentence> out;
    for (const auto& review : reviews) {
        for (const auto& sentence : nlp::split_sentences(review)) {
            if (auto o = score_sentence(sentence, kit, theta_subj)) {
                o->product_id = product_id;
                out.push_back(std::move(*o));
            }
        }
    }
    return out;
}

}  // namespace seopinion::haos
