#include "seopinion/hae/clustering.hpp"

#include <algorithm>
#include <numeric>

namespace seopinion::hae {

TermSpace::TermSpace(const std::vector<AspectTerm>& terms, const nlp::EmbeddingTable& embeddings) {
    for (const auto& t : terms) vectors_.emplace(t.term, nlp::embed_phrase(embeddings, t.term).vector);
}

const nlp::Vector* TermSpace::find(const std::string& term) const {
    auto it = vectors_.find(term);
    return it == vectors_.end() ? nullptr : &it->second;
}

double TermSpace::similarity(const std::string& a, const std::string& b) const {
    const auto* u = find(a);
    const auto* v = find(b);
    if (!u || !v) return 0.0;
    return nlp::similarity(*u, *v);
}

bool AspectCluster::contains(const std::string& term) const {
    return std::any_of(members.begin(), members.end(), [&](const AspectTerm& m) { return m.term == term; });
}

double cluster_sim(const AspectTerm& a, const AspectCluster& c, const TermSpace& space) {
    if (c.members.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& m : c.members) sum += space.similarity(a.term, m.term);
    return sum / static_cast<double>(c.members.size());
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<AspectCluster> cluster_aspects(std::vector<AspectTerm> aspects, const TermSpace& space, double theta_clu) {
    std::sort(aspects.begin(), aspects.end(), [](const auto& a, const auto& b) { return a.term < b.term; });
    aspects.erase(std::unique(aspects.begin(), aspects.end(),
                              [](const auto& a, const auto& b) { return a.term == b.term; }),
                  aspects.end());
    const std::size_t n = aspects.size();

    // Each aspect is compared with the clusters as they stood before the
    // merge pass, so a merge never changes what later aspects see. With the
    // transitive union below this yields the components of the graph
    // sim > theta, which only refine as theta grows.
    std::vector<std::vector<std::size_t>> clusters(n);
    for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
    const auto initial = clusters;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = initial[j];
            if (std::find(c.begin(), c.end(), i) != c.end()) continue;
            double sum = 0.0;
            for (auto m : c) sum += space.similarity(aspects[i].term, aspects[m].term);
            if (sum / static_cast<double>(c.size()) > theta_clu) clusters[j].push_back(i);
        }
    }

    UnionFind uf(n);
    for (const auto& c : clusters)
        for (std::size_t k = 1; k < c.size(); ++k) uf.unite(c[0], c[k]);

    std::vector<AspectCluster> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto root = uf.find(i);
        if (slot[root] == n) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].members.push_back(aspects[i]);
    }
    return out;
}

}  // namespace seopinion::hae
