#include "seopinion/service/store.hpp"

#include <fstream>
#include <sstream>

#include "seopinion/error.hpp"

namespace seopinion::service {

using ojson = nlohmann::ordered_json;

const summary::ProductSummary* SummaryStore::product(std::string_view id) const {
    for (const auto& p : products)
        if (p.product_id == id) return &p;
    return nullptr;
}

std::vector<SentenceItem> SummaryStore::sentences_for(const std::string& product_id, const std::string& category,
                                                      const std::string& child) const {
    auto it = sentences.find({product_id, category, child});
    return it == sentences.end() ? std::vector<SentenceItem>{} : it->second;
}

SummaryStore make_store(const summary::PipelineResult& result) {
    SummaryStore store;
    store.hierarchy = result.hierarchy;
    for (const auto& p : result.products) {
        store.products.push_back(p.summary);
        for (const auto& pair : p.pairs) {
            if (!pair.polarity) throw ValidationError("store built from an unclassified pair");
            store.sentences[{p.summary.product_id, pair.category, pair.child}].push_back(
                {pair.sentence.text, *pair.polarity});
        }
    }
    return store;
}

ojson to_json(const SummaryStore& store) {
    ojson products = ojson::array();
    for (const auto& p : store.products) products.push_back(summary::to_json(p));
    ojson groups = ojson::array();
    for (const auto& [key, items] : store.sentences) {
        ojson arr = ojson::array();
        for (const auto& s : items) arr.push_back({{"text", s.text}, {"polarity", std::string(haos::to_string(s.polarity))}});
        groups.push_back({{"product_id", std::get<0>(key)},
                          {"category", std::get<1>(key)},
                          {"child", std::get<2>(key)},
                          {"items", std::move(arr)}});
    }
    return {{"hierarchy", hae::to_json(store.hierarchy)}, {"products", std::move(products)}, {"sentences", std::move(groups)}};
}

SummaryStore store_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("hierarchy") || !j.contains("products"))
        throw SchemaError("store needs 'hierarchy' and 'products'");
    SummaryStore store;
    store.hierarchy = hae::hierarchy_from_json(j["hierarchy"]);
    if (!j["products"].is_array()) throw SchemaError("store 'products' must be an array");
    for (const auto& p : j["products"]) store.products.push_back(summary::product_summary_from_json(p));
    for (const auto& g : j.value("sentences", ojson::array())) {
        try {
            SentenceKey key{g.at("product_id").get<std::string>(), g.at("category").get<std::string>(),
                            g.at("child").get<std::string>()};
            const auto* cat = store.hierarchy.find(std::get<1>(key));
            if (!cat || !cat->has_child(std::get<2>(key)))
                throw SchemaError("sentence group (" + std::get<1>(key) + ", " + std::get<2>(key) +
                                  ") is not in the hierarchy");
            if (!store.product(std::get<0>(key)))
                throw SchemaError("sentence group for unknown product " + std::get<0>(key));
            auto& items = store.sentences[key];
            for (const auto& it : g.at("items"))
                items.push_back({it.at("text").get<std::string>(),
                                 haos::label_from_string(it.at("polarity").get<std::string>())});
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("store sentence group: ") + e.what());
        } catch (const ParseError& e) {
            throw SchemaError(std::string("store sentence group: ") + e.what());
        }
    }
    return store;
}

std::string serialize_store(const SummaryStore& store) { return to_json(store).dump(2) + "\n"; }

SummaryStore parse_store(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw SchemaError(std::string("store is not valid JSON: ") + e.what());
    }
    return store_from_json(j);
}

void save_store(const SummaryStore& store, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << serialize_store(store);
        if (!out.flush()) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

SummaryStore load_store(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open store " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_store(ss.str());
}

}  // namespace seopinion::service
