#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seopinion/nlp/toolkit.hpp"

namespace seopinion::haos {

struct OpinionSentence {
    std::string text;  // the sentence as written in the review
    nlp::TaggedSentence tagged;
    double pos_score = 0.0;  // raw sums over NOUN and ADJ tokens
    double neg_score = 0.0;
    double norm_pos = 0.0;  // sums divided by the NOUN+ADJ token count
    double norm_neg = 0.0;
    std::string product_id;
};

/// Lexicon entry for a token: its lemma, else its lowercase surface.
nlp::Polarity token_score(const nlp::SentimentLexicon& lexicon, const nlp::Token& token);

/// Scores one sentence. Returns nothing when it lacks a NOUN or an ADJ, or
/// when neither normalized score exceeds theta_subj.
std::optional<OpinionSentence> score_sentence(const std::string& sentence, const nlp::Toolkit& kit, double theta_subj);

/// Splits every review into sentences and keeps the opinionated ones, in
/// order. Throws ValidationError unless 0 <= theta_subj < 1.
std::vector<OpinionSentence> detect_subjectivity(const std::vector<std::string>& reviews, const nlp::Toolkit& kit,
                                                 double theta_subj, const std::string& product_id = {});

}  // namespace seopinion::haos
