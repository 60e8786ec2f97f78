#include "seopinion/ingestion/corpus.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "seopinion/error.hpp"

namespace seopinion::ingest {

using ojson = nlohmann::ordered_json;

const DetailPart* ProductRecord::part(std::string_view name) const {
    for (const auto& p : detail_parts)
        if (p.name == name) return &p;
    return nullptr;
}

std::string make_product_id(std::string_view site_id, std::string_view title) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    mix(site_id);
    mix(std::string_view("\x1f", 1));
    mix(title);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
        h >>= 4;
    }
    return out;
}

namespace {

std::vector<std::string> collect(const XPath& xpath, const Document& doc) {
    std::vector<std::string> out;
    for (auto& raw : xpath.evaluate(doc)) {
        auto s = normalize_whitespace(raw);
        if (!s.empty()) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

ProductRecord extract_product(std::string_view html, const SiteConfig& config) {
    auto doc = Document::parse(html);
    ProductRecord rec;
    rec.site_id = config.site_id;
    for (const auto& rule : config.detail_rules) {
        auto values = collect(rule.xpath, doc);
        if (rule.part_name == kTitlePart) {
            for (const auto& v : values) {
                if (!rec.title.empty()) rec.title += ' ';
                rec.title += v;
            }
            continue;
        }
        rec.detail_parts.push_back({rule.part_name, std::move(values), rule.tabular});
    }
    if (rec.title.empty())
        throw NoTitleError("no node matched the Title rule '" + config.title_rule().xpath.source() + "'");
    rec.reviews = collect(config.review_rule.xpath, doc);
    rec.product_id = make_product_id(rec.site_id, rec.title);
    return rec;
}

CorpusBuild build_corpus(const std::vector<Page>& pages, const std::map<std::string, SiteConfig>& configs,
                         std::string product_type, const SkipLogger& log) {
    CorpusBuild out;
    out.corpus.product_type = std::move(product_type);
    std::set<std::string> ids;
    for (const auto& page : pages) {
        auto it = configs.find(page.site_id);
        if (it == configs.end())
            throw UnknownSiteError("no site config for '" + page.site_id + "' (" + page.origin + ")");
        try {
            auto rec = extract_product(page.html, it->second);
            if (!ids.insert(rec.product_id).second) continue;
            out.corpus.records.push_back(std::move(rec));
        } catch (const NoTitleError& e) {
            SkippedPage skip{page.origin, e.what()};
            if (log) log(skip);
            out.skipped.push_back(std::move(skip));
        }
    }
    return out;
}

bool is_known_tabular_part(std::string_view part_name) {
    static constexpr std::array<std::string_view, 6> kNames{
        "Compare with similar items", "Product information", "Specifications",
        "Item specifics",             "About this product",  "Other Specifications"};
    for (auto n : kNames)
        if (n == part_name) return true;
    return false;
}

std::string serialize_corpus(const Corpus& corpus) {
    ojson arr = ojson::array();
    for (const auto& rec : corpus.records) {
        ojson details = ojson::object();
        details[std::string(kTitlePart)] = rec.title;
        ojson tabular = ojson::array();
        for (const auto& p : rec.detail_parts) {
            details[p.name] = p.values;
            if (p.tabular) tabular.push_back(p.name);
        }
        ojson obj = ojson::object();
        obj["productDetails"] = std::move(details);
        obj["customerReviews"] = rec.reviews;
        obj["meta"] = {{"productId", rec.product_id},
                       {"siteId", rec.site_id},
                       {"productType", corpus.product_type},
                       {"tabularParts", std::move(tabular)}};
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

namespace {

[[noreturn]] void schema(std::size_t i, const std::string& what) {
    throw SchemaError("corpus record " + std::to_string(i) + ": " + what);
}

std::vector<std::string> string_array(const ojson& v, std::size_t i, const std::string& key) {
    if (!v.is_array()) schema(i, "'" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string()) schema(i, "'" + key + "' must be an array of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

}  // namespace

Corpus parse_corpus(std::string_view json_text) {
    ojson root;
    try {
        root = ojson::parse(json_text);
    } catch (const ojson::parse_error& e) {
        throw SchemaError(std::string("corpus is not valid JSON: ") + e.what());
    }
    if (!root.is_array()) throw SchemaError("corpus must be a JSON array");

    Corpus corpus;
    bool have_type = false;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < root.size(); ++i) {
        const auto& obj = root[i];
        if (!obj.is_object()) schema(i, "must be an object");
        if (!obj.contains("productDetails")) schema(i, "missing 'productDetails'");
        if (!obj.contains("customerReviews")) schema(i, "missing 'customerReviews'");
        const auto& details = obj["productDetails"];
        if (!details.is_object()) schema(i, "'productDetails' must be an object");
        if (!details.contains(kTitlePart) || !details[std::string(kTitlePart)].is_string())
            schema(i, "'productDetails' needs a string 'Title'");

        ProductRecord rec;
        rec.title = details[std::string(kTitlePart)].get<std::string>();
        if (rec.title.empty()) schema(i, "empty 'Title'");
        rec.reviews = string_array(obj["customerReviews"], i, "customerReviews");

        std::set<std::string> tabular;
        std::string product_type;
        if (obj.contains("meta")) {
            const auto& meta = obj["meta"];
            if (!meta.is_object()) schema(i, "'meta' must be an object");
            auto str = [&](const char* key) -> std::string {
                if (!meta.contains(key)) return {};
                if (!meta[key].is_string()) schema(i, std::string("'meta.") + key + "' must be a string");
                return meta[key].get<std::string>();
            };
            rec.site_id = str("siteId");
            rec.product_id = str("productId");
            product_type = str("productType");
            if (meta.contains("tabularParts")) {
                auto names = string_array(meta["tabularParts"], i, "meta.tabularParts");
                tabular.insert(names.begin(), names.end());
            }
        } else {
            rec.site_id = "unknown";
            for (auto it = details.begin(); it != details.end(); ++it)
                if (is_known_tabular_part(it.key())) tabular.insert(it.key());
        }
        if (rec.site_id.empty()) rec.site_id = "unknown";
        if (rec.product_id.empty()) rec.product_id = make_product_id(rec.site_id, rec.title);

        for (auto it = details.begin(); it != details.end(); ++it) {
            if (it.key() == kTitlePart) continue;
            rec.detail_parts.push_back(
                {it.key(), string_array(it.value(), i, "productDetails." + it.key()), tabular.count(it.key()) > 0});
        }

        if (!have_type) {
            corpus.product_type = product_type;
            have_type = true;
        } else if (product_type != corpus.product_type) {
            schema(i, "productType '" + product_type + "' differs from '" + corpus.product_type + "'");
        }
        if (!ids.insert(rec.product_id).second) schema(i, "duplicate product id " + rec.product_id);
        corpus.records.push_back(std::move(rec));
    }
    return corpus;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << serialize_corpus(corpus);
        if (!out.flush()) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

Corpus read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
}

}  // namespace seopinion::ingest
