#pragma once

#include <memory>
#include <string>

#include "seopinion/service/api.hpp"

namespace seopinion::service {

/// HTTP/1.1 front end for ServiceApi.
class HttpServer {
public:
    explicit HttpServer(ServiceApi& api);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Serves until stop(); returns false if the listener failed.
    bool serve();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Plain-HTTP GET of a page for live scraping. Throws IoError on failure or
/// a non-200 status. https URLs are rejected (no TLS in this build).
std::string http_get(const std::string& url);

}  // namespace seopinion::service
