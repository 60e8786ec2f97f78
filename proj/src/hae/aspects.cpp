#include "seopinion/hae/aspects.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "seopinion/error.hpp"
#include "seopinion/nlp/text.hpp"

namespace seopinion::hae {

using nlp::Tag;

std::string_view to_string(Source source) { return source == Source::Direct ? "direct" : "candidate"; }

Source source_from_string(std::string_view name) {
    if (name == "direct") return Source::Direct;
    if (name == "candidate") return Source::Candidate;
    throw ParseError("unknown aspect source '" + std::string(name) + "'");
}

std::vector<AspectTerm> extract_direct_aspects(const ingest::ProductRecord& record) {
    std::set<std::string> terms;
    for (const auto& part : record.detail_parts) {
        if (!part.tabular) continue;
        for (const auto& label : part.values) {
            auto t = nlp::lemmatize_phrase(label);
            if (!t.empty()) terms.insert(std::move(t));
        }
    }
    std::vector<AspectTerm> out;
    for (auto& t : terms) out.push_back({t, Source::Direct, 1});
    return out;
}

namespace {

bool usable(const nlp::Token& t) {
    if (!nlp::is_word_token(t.lemma) || nlp::is_stop_word(t.lemma)) return false;
    return std::any_of(t.lemma.begin(), t.lemma.end(), [](unsigned char c) { return std::isalpha(c); });
}

}  // namespace

std::vector<std::string> candidate_terms(const nlp::TaggedSentence& sentence) {
    std::vector<std::string> out;
    const auto& toks = sentence.tokens;
    std::size_t i = 0;
    while (i < toks.size()) {
        if (toks[i].tag != Tag::Noun || !usable(toks[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < toks.size() && toks[i].tag == Tag::Noun && usable(toks[i])) out.push_back(toks[i++].lemma);
        std::size_t first = start;
        if (start > 0 && toks[start - 1].tag == Tag::Adj && usable(toks[start - 1])) first = start - 1;
        if (i - first >= 2) {
            if (i - first > 3) first = i - 3;
            std::string chunk;
            for (std::size_t k = first; k < i; ++k) {
                if (!chunk.empty()) chunk += ' ';
                chunk += toks[k].lemma;
            }
            out.push_back(std::move(chunk));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<AspectTerm> extract_candidate_aspects(const ingest::ProductRecord& record, const nlp::Toolkit& kit) {
    std::set<std::string> terms;
    for (const auto& part : record.detail_parts) {
        if (part.tabular) continue;
        for (const auto& value : part.values)
            for (const auto& sentence : nlp::split_sentences(value))
                for (auto& t : candidate_terms(kit.analyze(sentence))) terms.insert(std::move(t));
    }
    std::vector<AspectTerm> out;
    for (auto& t : terms) out.push_back({t, Source::Candidate, 1});
    return out;
}

AspectPool collect_aspects(const ingest::Corpus& corpus, const nlp::Toolkit& kit) {
    std::map<std::string, AspectTerm> all;
    for (const auto& rec : corpus.records) {
        std::map<std::string, Source> seen;
        for (auto& a : extract_candidate_aspects(rec, kit)) seen.emplace(a.term, Source::Candidate);
        for (auto& a : extract_direct_aspects(rec)) seen.insert_or_assign(a.term, Source::Direct);
        for (const auto& [term, src] : seen) {
            auto [it, fresh] = all.try_emplace(term, AspectTerm{term, src, 0});
            ++it->second.support;
            if (src == Source::Direct) it->second.source = Source::Direct;
        }
    }
    AspectPool pool;
    for (auto& [_, a] : all) (a.source == Source::Direct ? pool.direct : pool.candidate).push_back(std::move(a));
    return pool;
}

std::vector<AspectTerm> select_popular_aspects(const std::vector<AspectTerm>& direct,
                                               const std::vector<AspectTerm>& candidate,
                                               const nlp::EmbeddingTable& embeddings, const HaeParams& params) {
    std::map<std::string, AspectTerm> out;
    std::vector<nlp::Vector> direct_vecs;
    for (const auto& d : direct) {
        auto [it, fresh] = out.try_emplace(d.term, d);
        if (!fresh) it->second.support = std::max(it->second.support, d.support);
        it->second.source = Source::Direct;
        auto e = nlp::embed_phrase(embeddings, d.term);
        if (!e.oov) direct_vecs.push_back(std::move(e.vector));
    }
    for (const auto& c : candidate) {
        if (auto it = out.find(c.term); it != out.end()) {
            it->second.support = std::max(it->second.support, c.support);
            continue;
        }
        auto e = nlp::embed_phrase(embeddings, c.term);
        bool keep = false;
        if (direct.empty() || e.oov) {
            keep = c.support >= params.min_support;
        } else {
            for (const auto& d : direct_vecs) {
                if (nlp::similarity(e.vector, d) >= params.theta_sel) {
                    keep = true;
                    break;
                }
            }
        }
        if (keep) out.emplace(c.term, AspectTerm{c.term, Source::Candidate, c.support});
    }
    if (out.empty()) throw EmptyAspectSet("no popular aspects: the direct set is empty and no candidate is frequent enough");
    std::vector<AspectTerm> result;
    for (auto& [_, a] : out) result.push_back(std::move(a));
    return result;
}

}  // namespace seopinion::hae
