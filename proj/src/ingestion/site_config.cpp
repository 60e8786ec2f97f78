#include "seopinion/ingestion/site_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "seopinion/error.hpp"

namespace seopinion::ingest {

const XPathRule& SiteConfig::title_rule() const {
    for (const auto& r : detail_rules)
        if (r.part_name == kTitlePart) return r;
    throw ValidationError("site '" + site_id + "' has no Title rule");
}

bool looks_tabular(const XPath& xpath) {
    auto names = xpath.element_names();
    return std::any_of(names.begin(), names.end(), [](const std::string& n) {
        return n == "table" || n == "tr" || n == "th" || n == "td";
    });
}

namespace {

std::string scalar(const YAML::Node& node, const char* key, const std::string& where) {
    auto v = node[key];
    if (!v || !v.IsScalar() || v.Scalar().empty())
        throw ValidationError(where + ": missing or empty '" + key + "'");
    return v.Scalar();
}

}  // namespace

SiteConfig parse_site_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("site config: ") + e.what());
    }
    if (!root.IsMap()) throw ParseError("site config: top level must be a mapping");

    SiteConfig cfg;
    cfg.site_id = scalar(root, "site_id", "site config");
    auto rules = root["rules"];
    if (!rules || !rules.IsSequence()) throw ValidationError("site '" + cfg.site_id + "': 'rules' must be a list");

    bool have_review = false;
    std::size_t titles = 0;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        std::string where = "site '" + cfg.site_id + "' rule " + std::to_string(i + 1);
        if (!r.IsMap()) throw ValidationError(where + ": must be a mapping");
        XPathRule rule{scalar(r, "part", where), XPath::compile(scalar(r, "xpath", where)), RuleKind::Detail, false};

        std::string kind = r["kind"] ? r["kind"].as<std::string>() : "detail";
        if (kind == "detail") {
            rule.kind = RuleKind::Detail;
        } else if (kind == "review") {
            rule.kind = RuleKind::Review;
        } else {
            throw ValidationError(where + ": kind must be 'detail' or 'review', got '" + kind + "'");
        }

        if (auto t = r["tabular"]) {
            try {
                rule.tabular = t.as<bool>();
            } catch (const YAML::Exception&) {
                throw ValidationError(where + ": 'tabular' must be true or false");
            }
        } else {
            rule.tabular = rule.kind == RuleKind::Detail && looks_tabular(rule.xpath);
        }

        if (rule.kind == RuleKind::Review) {
            if (have_review) throw ValidationError("site '" + cfg.site_id + "': more than one review rule");
            have_review = true;
            cfg.review_rule = std::move(rule);
        } else {
            if (rule.part_name == kTitlePart) {
                ++titles;
                rule.tabular = false;
            }
            auto dup = std::find_if(cfg.detail_rules.begin(), cfg.detail_rules.end(),
                                    [&](const XPathRule& o) { return o.part_name == rule.part_name; });
            if (dup != cfg.detail_rules.end())
                throw ValidationError(where + ": duplicate part '" + rule.part_name + "' (use '|' to union paths)");
            cfg.detail_rules.push_back(std::move(rule));
        }
    }
    if (cfg.detail_rules.empty()) throw ValidationError("site '" + cfg.site_id + "': no detail rules");
    if (titles != 1) throw ValidationError("site '" + cfg.site_id + "': exactly one Title rule required");
    if (!have_review) throw ValidationError("site '" + cfg.site_id + "': no review rule");
    return cfg;
}

SiteConfig load_site_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open site config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_site_config(ss.str());
}

}  // namespace seopinion::ingest
