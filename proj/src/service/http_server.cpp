#include "seopinion/service/http_server.hpp"

#include <httplib.h>

#include "seopinion/error.hpp"

namespace seopinion::service {

struct HttpServer::Impl {
    ServiceApi& api;
    httplib::Server server;

    explicit Impl(ServiceApi& a) : api(a) {
        auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
            auto target = req.target.empty() ? req.path : req.target;
            auto out = api.handle(req.method, target, req.body);
            res.status = out.status;
            if (out.version) res.set_header(kVersionHeader, std::to_string(out.version));
            res.set_content(out.body.dump(), "application/json; charset=utf-8");
        };
        server.Get(R"(/.*)", dispatch);
        server.Post(R"(/.*)", dispatch);
    }
};

HttpServer::HttpServer(ServiceApi& api) : impl_(std::make_unique<Impl>(api)) {}
HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::serve() { return impl_->server.listen_after_bind(); }
void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}
void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

std::string http_get(const std::string& url) {
    constexpr std::string_view kScheme = "http://";
    if (url.rfind(kScheme, 0) != 0) throw IoError("only http:// URLs can be fetched: " + url);
    auto slash = url.find('/', kScheme.size());
    auto host = url.substr(0, slash);
    auto path = slash == std::string::npos ? std::string("/") : url.substr(slash);
    httplib::Client client(host);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) throw IoError("fetch failed for " + url + ": " + httplib::to_string(res.error()));
    if (res->status != 200) throw IoError("fetch of " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace seopinion::service
