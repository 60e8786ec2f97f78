#include "seopinion/summarizer/summary.hpp"

#include <algorithm>
#include <map>

#include "seopinion/error.hpp"

namespace seopinion::summary {

using ojson = nlohmann::ordered_json;

double aspect_rating(int n_pos, int n_neg) {
    if (n_pos < 0 || n_neg < 0) throw ValidationError("sentence counts must be non-negative");
    if (n_pos + n_neg == 0) throw EmptyAspect("rating of an aspect with no sentences is undefined");
    return (5.0 * n_pos + 1.0 * n_neg) / static_cast<double>(n_pos + n_neg);
}

namespace {

void rate(AspectSummary& s) {
    s.n_sentences = s.n_pos + s.n_neg;
    s.rating = s.n_sentences > 0 ? std::optional<double>(aspect_rating(s.n_pos, s.n_neg)) : std::nullopt;
}

// Children: count, then name (plain byte order, so "General" leads its ties).
void order_children(std::vector<AspectSummary>& v) {
    std::sort(v.begin(), v.end(), [](const AspectSummary& a, const AspectSummary& b) {
        if (a.n_sentences != b.n_sentences) return a.n_sentences > b.n_sentences;
        return a.aspect < b.aspect;
    });
}

// Categories: count, ties keep hierarchy order.
void order_categories(std::vector<AspectSummary>& v) {
    std::stable_sort(v.begin(), v.end(),
                     [](const AspectSummary& a, const AspectSummary& b) { return a.n_sentences > b.n_sentences; });
}

}  // namespace

ProductSummary summarize_product(const hae::AspectHierarchy& h, const std::vector<haos::MappedOpinion>& pairs,
                                 std::string product_id, std::string title, std::string site_id) {
    ProductSummary out{std::move(product_id), std::move(title), std::move(site_id), {}, 0, std::nullopt};
    std::map<std::pair<std::string, std::string>, std::pair<int, int>> tally;
    for (const auto& p : pairs) {
        const auto* cat = h.find(p.category);
        if (!cat || !cat->has_child(p.child))
            throw ValidationError("pair (" + p.category + ", " + p.child + ") is not in the hierarchy");
        if (!p.polarity) throw ValidationError("pair (" + p.category + ", " + p.child + ") has no polarity");
        auto& t = tally[{p.category, p.child}];
        (*p.polarity == haos::Label::Positive ? t.first : t.second) += 1;
    }
    int pos = 0, neg = 0;
    for (const auto& cat : h.categories) {
        AspectSummary cs;
        cs.aspect = cat.parent.term;
        for (const auto& child : cat.child_names()) {
            AspectSummary ch;
            ch.aspect = child;
            if (auto it = tally.find({cat.parent.term, child}); it != tally.end()) {
                ch.n_pos = it->second.first;
                ch.n_neg = it->second.second;
            }
            rate(ch);
            cs.n_pos += ch.n_pos;
            cs.n_neg += ch.n_neg;
            cs.children.push_back(std::move(ch));
        }
        order_children(cs.children);
        rate(cs);
        pos += cs.n_pos;
        neg += cs.n_neg;
        out.categories.push_back(std::move(cs));
    }
    order_categories(out.categories);
    out.total_sentences = pos + neg;
    if (out.total_sentences > 0) out.rating = aspect_rating(pos, neg);
    return out;
}

ojson to_json(const AspectSummary& s) {
    ojson j = {{"aspect", s.aspect},
               {"n_sentences", s.n_sentences},
               {"n_pos", s.n_pos},
               {"n_neg", s.n_neg},
               {"rating", s.rating ? ojson(*s.rating) : ojson(nullptr)}};
    ojson children = ojson::array();
    for (const auto& c : s.children) children.push_back(to_json(c));
    j["children"] = std::move(children);
    return j;
}

ojson to_json(const ProductSummary& s) {
    ojson cats = ojson::array();
    for (const auto& c : s.categories) cats.push_back(to_json(c));
    return {{"product_id", s.product_id},
            {"title", s.title},
            {"site_id", s.site_id},
            {"total_sentences", s.total_sentences},
            {"rating", s.rating ? ojson(*s.rating) : ojson(nullptr)},
            {"categories", std::move(cats)}};
}

namespace {

AspectSummary aspect_from(const ojson& j) {
    if (!j.is_object() || !j.contains("aspect") || !j["aspect"].is_string())
        throw SchemaError("aspect summary needs a string 'aspect'");
    AspectSummary s;
    s.aspect = j["aspect"].get<std::string>();
    try {
        s.n_pos = j.at("n_pos").get<int>();
        s.n_neg = j.at("n_neg").get<int>();
        s.n_sentences = j.at("n_sentences").get<int>();
        if (j.contains("rating") && !j["rating"].is_null()) s.rating = j["rating"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("aspect summary '" + s.aspect + "': " + e.what());
    }
    if (j.contains("children"))
        for (const auto& c : j["children"]) s.children.push_back(aspect_from(c));
    return s;
}

}  // namespace

ProductSummary product_summary_from_json(const ojson& j) {
    if (!j.is_object()) throw SchemaError("product summary must be an object");
    ProductSummary s;
    try {
        s.product_id = j.at("product_id").get<std::string>();
        s.title = j.value("title", std::string());
        s.site_id = j.value("site_id", std::string());
        s.total_sentences = j.at("total_sentences").get<int>();
        if (j.contains("rating") && !j["rating"].is_null()) s.rating = j["rating"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("product summary: ") + e.what());
    }
    if (j.contains("categories"))
        for (const auto& c : j["categories"]) s.categories.push_back(aspect_from(c));
    return s;
}

}  // namespace seopinion::summary
