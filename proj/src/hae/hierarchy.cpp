#include "seopinion/hae/hierarchy.hpp"

#include <algorithm>
#include <cmath>

#include "seopinion/error.hpp"

namespace seopinion::hae {

using ojson = nlohmann::ordered_json;

bool Category::has_child(std::string_view child) const {
    if (child == kGeneral) return true;
    return std::any_of(children.begin(), children.end(), [&](const AspectTerm& c) { return c.term == child; });
}

std::vector<std::string> Category::child_names() const {
    std::vector<std::string> out;
    for (const auto& c : children) out.push_back(c.term);
    out.emplace_back(kGeneral);
    return out;
}

const Category* AspectHierarchy::find(std::string_view parent) const {
    for (const auto& c : categories)
        if (c.parent.term == parent) return &c;
    return nullptr;
}

std::size_t AspectHierarchy::aspect_count() const {
    std::size_t n = 0;
    for (const auto& c : categories) n += 1 + c.children.size();
    return n;
}

std::size_t medoid_index(const AspectCluster& cluster, const TermSpace& space) {
    const auto& m = cluster.members;
    if (m.size() <= 1) return 0;
    std::vector<double> mean(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t k = 0; k < m.size(); ++k)
            if (k != i) mean[i] += space.similarity(m[i].term, m[k].term);
        mean[i] /= static_cast<double>(m.size() - 1);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < m.size(); ++i) {
        double d = mean[i] - mean[best];
        if (d > 1e-12) {
            best = i;
        } else if (std::abs(d) <= 1e-12) {
            if (m[i].support > m[best].support || (m[i].support == m[best].support && m[i].term < m[best].term))
                best = i;
        }
    }
    return best;
}

AspectHierarchy build_hierarchy(const std::vector<AspectCluster>& clusters, std::string product_type,
                                const TermSpace& space) {
    AspectHierarchy h;
    h.product_type = std::move(product_type);
    for (const auto& cluster : clusters) {
        if (cluster.members.empty()) continue;
        Category cat;
        auto p = medoid_index(cluster, space);
        cat.parent = cluster.members[p];
        for (std::size_t i = 0; i < cluster.members.size(); ++i) {
            cat.support += cluster.members[i].support;
            if (i != p) cat.children.push_back(cluster.members[i]);
        }
        std::sort(cat.children.begin(), cat.children.end(), [](const auto& a, const auto& b) { return a.term < b.term; });
        h.categories.push_back(std::move(cat));
    }
    std::stable_sort(h.categories.begin(), h.categories.end(), [](const Category& a, const Category& b) {
        if (a.support != b.support) return a.support > b.support;
        return a.parent.term < b.parent.term;
    });
    return h;
}

AspectHierarchy extract_hierarchy(const ingest::Corpus& corpus, const nlp::Toolkit& kit, const HaeParams& params) {
    auto pool = collect_aspects(corpus, kit);
    auto popular = select_popular_aspects(pool.direct, pool.candidate, kit.embeddings, params);
    TermSpace space(popular, kit.embeddings);
    return build_hierarchy(cluster_aspects(popular, space, params.theta_clu), corpus.product_type, space);
}

namespace {

ojson term_json(const AspectTerm& t) {
    return {{"term", t.term}, {"support", t.support}, {"source", std::string(to_string(t.source))}};
}

AspectTerm term_from(const ojson& j) {
    if (!j.is_object() || !j.contains("term") || !j["term"].is_string())
        throw SchemaError("hierarchy member needs a string 'term'");
    AspectTerm t;
    t.term = j["term"].get<std::string>();
    t.support = j.value("support", 1);
    try {
        t.source = source_from_string(j.value("source", std::string("candidate")));
    } catch (const ParseError& e) {
        throw SchemaError(e.what());
    }
    return t;
}

}  // namespace

ojson to_json(const AspectHierarchy& h) {
    ojson cats = ojson::array();
    for (const auto& c : h.categories) {
        ojson members = ojson::array();
        members.push_back(term_json(c.parent));
        for (const auto& ch : c.children) members.push_back(term_json(ch));
        cats.push_back({{"parent", c.parent.term},
                        {"children", c.child_names()},
                        {"support", c.support},
                        {"members", std::move(members)}});
    }
    return {{"product_type", h.product_type}, {"categories", std::move(cats)}};
}

AspectHierarchy hierarchy_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("categories") || !j["categories"].is_array())
        throw SchemaError("hierarchy needs a 'categories' array");
    AspectHierarchy h;
    h.product_type = j.value("product_type", std::string());
    for (const auto& c : j["categories"]) {
        if (!c.is_object() || !c.contains("parent") || !c["parent"].is_string())
            throw SchemaError("category needs a string 'parent'");
        Category cat;
        auto parent = c["parent"].get<std::string>();
        if (c.contains("members")) {
            if (!c["members"].is_array() || c["members"].empty())
                throw SchemaError("category '" + parent + "' has no members");
            for (const auto& m : c["members"]) {
                auto t = term_from(m);
                if (t.term == parent)
                    cat.parent = t;
                else
                    cat.children.push_back(std::move(t));
            }
            if (cat.parent.term != parent) throw SchemaError("parent '" + parent + "' missing from its members");
        } else {
            cat.parent = {parent, Source::Candidate, 1};
            for (const auto& ch : c.value("children", ojson::array())) {
                auto name = ch.get<std::string>();
                if (name != kGeneral) cat.children.push_back({name, Source::Candidate, 1});
            }
        }
        std::sort(cat.children.begin(), cat.children.end(), [](const auto& a, const auto& b) { return a.term < b.term; });
        cat.support = c.value("support", 0);
        h.categories.push_back(std::move(cat));
    }
    return h;
}

}  // namespace seopinion::hae
