#include "seopinion/service/api.hpp"

#include <vector>

#include "seopinion/error.hpp"

namespace seopinion::service {

using ojson = nlohmann::ordered_json;

Response error_response(int status, std::string_view code, std::string_view message, std::uint64_t version) {
    return {status, {{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}}, version};
}

std::string percent_decode(std::string_view s) {
    auto hex = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size()) {
            int hi = hex(s[i + 1]), lo = hex(s[i + 2]);
            if (hi >= 0 && lo >= 0) {
                out += static_cast<char>(hi * 16 + lo);
                i += 2;
                continue;
            }
        }
        out += s[i];
    }
    return out;
}

ServiceApi::ServiceApi(std::shared_ptr<const nlp::Toolkit> kit, summary::PipelineConfig defaults,
                       std::filesystem::path store_path)
    : kit_(std::move(kit)), defaults_(std::move(defaults)), store_path_(std::move(store_path)) {}

std::uint64_t ServiceApi::install(SummaryStore store) {
    auto fresh = std::make_shared<VersionedStore>();
    fresh->store = std::move(store);
    std::lock_guard lock(mu_);
    fresh->version = next_version_++;
    current_ = std::move(fresh);
    return current_->version;
}

std::shared_ptr<const VersionedStore> ServiceApi::snapshot() const {
    std::lock_guard lock(mu_);
    return current_;
}

namespace {

Response no_store() { return error_response(503, "no_store", "no summary store is loaded; run the pipeline first"); }

ojson top_categories(const summary::ProductSummary& p, std::size_t limit) {
    ojson out = ojson::array();
    for (const auto& c : p.categories) {
        if (out.size() >= limit || c.n_sentences == 0) break;
        out.push_back({{"aspect", c.aspect}, {"n_sentences", c.n_sentences}, {"rating", *c.rating}});
    }
    return out;
}

}  // namespace

Response ServiceApi::list_products() const {
    auto snap = snapshot();
    if (!snap) return no_store();
    ojson arr = ojson::array();
    for (const auto& p : snap->store.products) {
        arr.push_back({{"product_id", p.product_id},
                       {"title", p.title},
                       {"site_id", p.site_id},
                       {"total_sentences", p.total_sentences},
                       {"rating", p.rating ? ojson(*p.rating) : ojson(nullptr)},
                       {"top_categories", top_categories(p, 3)}});
    }
    return {200, std::move(arr), snap->version};
}

Response ServiceApi::product_summary(const std::string& id) const {
    auto snap = snapshot();
    if (!snap) return no_store();
    const auto* p = snap->store.product(id);
    if (!p) return error_response(404, "unknown_product", "no product with id '" + id + "'", snap->version);
    return {200, summary::to_json(*p), snap->version};
}

Response ServiceApi::aspect_sentences(const std::string& id, const std::string& category,
                                      const std::string& child) const {
    auto snap = snapshot();
    if (!snap) return no_store();
    const auto& store = snap->store;
    if (!store.product(id)) return error_response(404, "unknown_product", "no product with id '" + id + "'", snap->version);
    const auto* cat = store.hierarchy.find(category);
    if (!cat) return error_response(404, "unknown_aspect", "no aspect category '" + category + "'", snap->version);
    if (!cat->has_child(child))
        return error_response(404, "unknown_aspect", "'" + child + "' is not a child of '" + category + "'",
                              snap->version);
    auto items = store.sentences_for(id, category, child);
    ojson arr = ojson::array();
    // Positive group first, then negative; each keeps review order.
    for (auto want : {haos::Label::Positive, haos::Label::Negative})
        for (const auto& s : items)
            if (s.polarity == want) arr.push_back({{"text", s.text}, {"polarity", std::string(haos::to_string(s.polarity))}});
    return {200, std::move(arr), snap->version};
}

namespace {

summary::PipelineConfig apply_overrides(summary::PipelineConfig cfg, const ojson& o) {
    if (!o.is_object()) throw ValidationError("'config' must be an object");
    for (auto it = o.begin(); it != o.end(); ++it) {
        const auto& k = it.key();
        const auto& v = it.value();
        if (k == "min_support") {
            if (!v.is_number_integer() || v.get<int>() < 1) throw ValidationError("min_support must be a positive integer");
            cfg.hae.min_support = v.get<int>();
            continue;
        }
        if (!v.is_number()) throw ValidationError("'" + k + "' must be a number");
        double x = v.get<double>();
        if (!(x >= 0.0 && x < 1.0)) throw ValidationError("'" + k + "' must lie in [0, 1)");
        if (k == "theta_sel")
            cfg.hae.theta_sel = x;
        else if (k == "theta_clu")
            cfg.hae.theta_clu = x;
        else if (k == "theta_subj")
            cfg.theta_subj = x;
        else if (k == "theta_map")
            cfg.theta_map = x;
        else
            throw ValidationError("unknown config key '" + k + "'");
    }
    return cfg;
}

struct Flag {
    std::atomic<bool>& f;
    ~Flag() { f.store(false); }
};

}  // namespace

Response ServiceApi::run_pipeline(std::string_view body) {
    bool expected = false;
    if (!running_.compare_exchange_strong(expected, true))
        return error_response(409, "run_in_progress", "a pipeline run is already in progress");
    Flag release{running_};

    ojson req;
    try {
        req = body.empty() ? ojson::object() : ojson::parse(body);
    } catch (const ojson::parse_error& e) {
        return error_response(400, "bad_request", std::string("request body is not valid JSON: ") + e.what());
    }
    if (!req.is_object() || !req.contains("corpus_path") || !req["corpus_path"].is_string())
        return error_response(400, "bad_request", "request needs a string 'corpus_path'");

    summary::PipelineResult result;
    try {
        auto cfg = apply_overrides(defaults_, req.value("config", ojson::object()));
        auto corpus = ingest::read_corpus(req["corpus_path"].get<std::string>());
        result = summary::run_pipeline(corpus, *kit_, cfg);
    } catch (const IoError& e) {
        return error_response(400, "bad_corpus", e.what());
    } catch (const SchemaError& e) {
        return error_response(400, "bad_corpus", e.what());
    } catch (const ValidationError& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const hae::EmptyAspectSet& e) {
        return error_response(400, "no_aspects", e.what());
    }

    auto store = make_store(result);
    if (before_swap) before_swap();
    if (!store_path_.empty()) {
        try {
            save_store(store, store_path_);
        } catch (const IoError& e) {
            return error_response(500, "store_write_failed", e.what());
        }
    }
    auto n_products = store.products.size();
    const auto version = install(std::move(store));
    std::uint64_t run;
    {
        std::lock_guard lock(mu_);
        run = ++runs_;
    }
    return {200,
            {{"run_id", "run-" + std::to_string(run)},
             {"status", "completed"},
             {"store_version", version},
             {"products", n_products}},
            version};
}

Response ServiceApi::handle(std::string_view method, std::string_view target, std::string_view body) {
    if (auto q = target.find('?'); q != std::string_view::npos) target = target.substr(0, q);
    std::vector<std::string> seg;
    std::size_t i = 0;
    while (i < target.size()) {
        if (target[i] == '/') {
            ++i;
            continue;
        }
        auto j = target.find('/', i);
        if (j == std::string_view::npos) j = target.size();
        seg.push_back(percent_decode(target.substr(i, j - i)));
        i = j;
    }
    if (method == "GET") {
        if (seg.size() == 1 && seg[0] == "products") return list_products();
        if (seg.size() == 3 && seg[0] == "products" && seg[2] == "summary") return product_summary(seg[1]);
        if (seg.size() == 6 && seg[0] == "products" && seg[2] == "aspects" && seg[5] == "sentences")
            return aspect_sentences(seg[1], seg[3], seg[4]);
    } else if (method == "POST") {
        if (seg.size() == 2 && seg[0] == "pipeline" && seg[1] == "run") return run_pipeline(body);
    }
    return error_response(404, "not_found", "no route for " + std::string(method) + " " + std::string(target));
}

}  // namespace seopinion::service
