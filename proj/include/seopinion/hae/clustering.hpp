#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "seopinion/hae/aspects.hpp"
#include "seopinion/nlp/embeddings.hpp"

namespace seopinion::hae {

/// Term -> vector lookup used by clustering. Built from an embedding table
/// (multiword terms average their tokens) or directly from vectors.
class TermSpace {
public:
    TermSpace() = default;
    explicit TermSpace(std::unordered_map<std::string, nlp::Vector> vectors) : vectors_(std::move(vectors)) {}
    TermSpace(const std::vector<AspectTerm>& terms, const nlp::EmbeddingTable& embeddings);

    /// Cosine of the two terms' vectors; 0 when either is zero or unknown.
    [[nodiscard]] double similarity(const std::string& a, const std::string& b) const;
    [[nodiscard]] const nlp::Vector* find(const std::string& term) const;

private:
    std::unordered_map<std::string, nlp::Vector> vectors_;
};

struct AspectCluster {
    std::vector<AspectTerm> members;  // sorted by term

    [[nodiscard]] bool contains(const std::string& term) const;
};

/// Mean similarity of `a` to the members of `c`.
double cluster_sim(const AspectTerm& a, const AspectCluster& c, const TermSpace& space);

/// Starts from singletons; visits aspects in lexicographic order and merges
/// each into every cluster whose cluster_sim, measured on the clusters as they
/// were before the pass, exceeds theta_clu; finally unions clusters that share
/// a member. Raising theta_clu never lowers the cluster count. Returns a partition of `aspects`,
/// clusters ordered by their smallest term.
std::vector<AspectCluster> cluster_aspects(std::vector<AspectTerm> aspects, const TermSpace& space, double theta_clu);

}  // namespace seopinion::hae
