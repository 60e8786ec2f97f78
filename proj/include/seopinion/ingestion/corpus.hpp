#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "seopinion/ingestion/site_config.hpp"

namespace seopinion::ingest {

struct DetailPart {
    std::string name;
    std::vector<std::string> values;
    bool tabular = false;

    bool operator==(const DetailPart&) const = default;
};

/// One product page's extracted details and reviews.
struct ProductRecord {
    std::string product_id;
    std::string site_id;
    std::string title;
    std::vector<DetailPart> detail_parts;  // site config order, Title excluded
    std::vector<std::string> reviews;

    [[nodiscard]] const DetailPart* part(std::string_view name) const;

    bool operator==(const ProductRecord&) const = default;
};

struct Corpus {
    std::string product_type;
    std::vector<ProductRecord> records;

    bool operator==(const Corpus&) const = default;
};

/// Lowercase hex of a 64-bit FNV-1a hash over (site_id, title).
std::string make_product_id(std::string_view site_id, std::string_view title);

/// Runs every rule of `config` over the page. Only the Title rule can fail.
ProductRecord extract_product(std::string_view html, const SiteConfig& config);

struct Page {
    std::string site_id;
    std::string html;
    std::string origin;  // file name or URL, for skip reports
};

struct SkippedPage {
    std::string origin;
    std::string reason;
};

struct CorpusBuild {
    Corpus corpus;
    std::vector<SkippedPage> skipped;
};

using SkipLogger = std::function<void(const SkippedPage&)>;

/// Extracts each page; titleless pages are skipped (and reported), duplicate
/// product ids keep the first occurrence. Throws UnknownSiteError when a page
/// names a site without a config.
CorpusBuild build_corpus(const std::vector<Page>& pages, const std::map<std::string, SiteConfig>& configs,
                         std::string product_type, const SkipLogger& log = {});

/// Corpus file: JSON array of {"productDetails", "customerReviews", "meta"}.
std::string serialize_corpus(const Corpus& corpus);
Corpus parse_corpus(std::string_view json_text);

void write_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus read_corpus(const std::filesystem::path& path);

/// Part names that hold specification-table labels when a corpus file carries
/// no "meta" block (plain scraper output).
bool is_known_tabular_part(std::string_view part_name);

}  // namespace seopinion::ingest
