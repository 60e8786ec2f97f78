#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seopinion/ingestion/corpus.hpp"
#include "seopinion/nlp/toolkit.hpp"

namespace seopinion::hae {

enum class Source { Direct, Candidate };

std::string_view to_string(Source source);
Source source_from_string(std::string_view name);

struct AspectTerm {
    std::string term;  // lemmatized, lowercase, possibly multiword
    Source source = Source::Candidate;
    int support = 1;  // number of records mentioning the term

    bool operator==(const AspectTerm&) const = default;
};

struct HaeParams {
    double theta_sel = 0.55;
    double theta_clu = 0.50;
    int min_support = 2;
};

/// Lemmatized labels of the record's tabular parts, sorted, support 1.
std::vector<AspectTerm> extract_direct_aspects(const ingest::ProductRecord& record);

/// Nouns and noun chunks of one tagged sentence: every non-stop-word NOUN
/// lemma, plus each maximal NOUN run (with at most one ADJ directly before
/// it) of two or more tokens, cut to its last three.
std::vector<std::string> candidate_terms(const nlp::TaggedSentence& sentence);

/// candidate_terms over every sentence of the record's free-text parts.
std::vector<AspectTerm> extract_candidate_aspects(const ingest::ProductRecord& record, const nlp::Toolkit& kit);

struct AspectPool {
    std::vector<AspectTerm> direct;
    std::vector<AspectTerm> candidate;
};

/// Direct and candidate terms over a whole corpus. A term's support counts
/// the records where it occurs in either role; a term that is direct in any
/// record is direct.
AspectPool collect_aspects(const ingest::Corpus& corpus, const nlp::Toolkit& kit);

/// Ad plus the candidates whose best cosine to a direct aspect reaches
/// theta_sel. Candidates with no in-vocabulary token are kept iff their
/// support reaches min_support, as are all candidates when Ad is empty.
/// Sorted by term. Throws EmptyAspectSet when nothing survives.
std::vector<AspectTerm> select_popular_aspects(const std::vector<AspectTerm>& direct,
                                               const std::vector<AspectTerm>& candidate,
                                               const nlp::EmbeddingTable& embeddings, const HaeParams& params);

}  // namespace seopinion::hae
