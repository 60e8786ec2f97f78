#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "seopinion/service/store.hpp"

namespace seopinion::service {

struct VersionedStore {
    SummaryStore store;
    std::uint64_t version = 0;
};

struct Response {
    int status = 200;
    nlohmann::ordered_json body;
    std::uint64_t version = 0;  // store version the response was computed from; 0 = none
};

inline constexpr const char* kVersionHeader = "X-Store-Version";

/// Transport-independent request handling. Readers take a snapshot pointer
/// once per request, so each response reflects exactly one store version.
class ServiceApi {
public:
    /// `store_path`, when set, receives the store after each successful run.
    ServiceApi(std::shared_ptr<const nlp::Toolkit> kit, summary::PipelineConfig defaults,
               std::filesystem::path store_path = {});

    /// Installs a store under a fresh version number, which is returned.
    std::uint64_t install(SummaryStore store);
    [[nodiscard]] std::shared_ptr<const VersionedStore> snapshot() const;

    Response list_products() const;
    Response product_summary(const std::string& id) const;
    Response aspect_sentences(const std::string& id, const std::string& category, const std::string& child) const;
    /// Body: {"corpus_path": "...", "config": {theta_sel, theta_clu, min_support, theta_subj, theta_map}}.
    Response run_pipeline(std::string_view body);

    /// Routes by method and raw request target (percent-encoded segments,
    /// optional query string).
    Response handle(std::string_view method, std::string_view target, std::string_view body = {});

    /// Called after the pipeline finishes and before the store is swapped.
    /// Tests use it to hold a run open.
    std::function<void()> before_swap;

private:
    std::shared_ptr<const nlp::Toolkit> kit_;
    summary::PipelineConfig defaults_;
    std::filesystem::path store_path_;

    mutable std::mutex mu_;  // guards current_ (no atomic<shared_ptr> in this toolchain)
    std::shared_ptr<const VersionedStore> current_;
    std::uint64_t next_version_ = 1;
    std::atomic<bool> running_{false};
    std::uint64_t runs_ = 0;
};

Response error_response(int status, std::string_view code, std::string_view message, std::uint64_t version = 0);

/// Decodes %XX escapes; '+' is left alone. Malformed escapes are kept verbatim.
std::string percent_decode(std::string_view s);

}  // namespace seopinion::service
