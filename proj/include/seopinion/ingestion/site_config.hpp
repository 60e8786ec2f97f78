#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "seopinion/ingestion/xpath.hpp"

namespace seopinion::ingest {

inline constexpr std::string_view kTitlePart = "Title";

enum class RuleKind { Detail, Review };

struct XPathRule {
    std::string part_name;
    XPath xpath;
    RuleKind kind = RuleKind::Detail;
    // The rule reads attribute names out of a specification table, so its
    // values are direct aspects rather than free text.
    bool tabular = false;
};

struct SiteConfig {
    std::string site_id;
    std::vector<XPathRule> detail_rules;  // config order; includes the Title rule
    XPathRule review_rule;

    [[nodiscard]] const XPathRule& title_rule() const;
};

/// Guess for the `tabular` flag when a config leaves it out: the path walks
/// through table, tr, th or td elements.
bool looks_tabular(const XPath& xpath);

/// Parses a site rule file (YAML). See docs/site-rules.md for the format.
///
/// Throws ParseError for malformed YAML or XPath syntax, ValidationError for
/// structural problems (no Title rule, no detail rules, missing review rule, ...).
SiteConfig parse_site_config(std::string_view text);
SiteConfig load_site_config(const std::filesystem::path& path);

}  // namespace seopinion::ingest
