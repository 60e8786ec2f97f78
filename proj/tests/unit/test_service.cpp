#include <doctest.h>

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <thread>

#include <httplib.h>

#include "seopinion/error.hpp"
#include "seopinion/service/api.hpp"
#include "seopinion/service/http_server.hpp"
#include "seopinion/service/store.hpp"
#include "support/fixtures.hpp"
#include "support/schema.hpp"

using namespace seopinion;
using namespace seopinion::service;
using seopinion::test::fixtures_dir;
using seopinion::test::read_json;
using seopinion::test::validate;
using ojson = nlohmann::ordered_json;

namespace {

std::filesystem::path expected(const std::string& name) { return fixtures_dir() / "planted" / "expected" / name; }

std::shared_ptr<const nlp::Toolkit> planted_kit_ptr() {
    static auto kit = std::make_shared<const nlp::Toolkit>(seopinion::test::planted_kit());
    return kit;
}

void install_golden(ServiceApi& api) { api.install(load_store(expected("store.json"))); }

std::string planted_corpus() { return (fixtures_dir() / "planted" / "corpus.json").string(); }

}  // namespace

TEST_SUITE("service") {

TEST_CASE("store file round trip") {
    auto text = seopinion::test::read_file(expected("store.json"));
    auto store = parse_store(text);
    CHECK(serialize_store(store) == text);
    auto dir = seopinion::test::scratch_dir("store");
    save_store(store, dir / "s.json");
    CHECK(load_store(dir / "s.json") == store);
    CHECK_FALSE(std::filesystem::exists(dir / "s.json.tmp"));
    CHECK_THROWS_AS(load_store(dir / "missing.json"), IoError);
}

TEST_CASE("store validation") {
    auto j = read_json(expected("store.json"));
    auto bad_child = j;
    bad_child["sentences"][0]["child"] = "nonsense";
    CHECK_THROWS_AS(store_from_json(bad_child), SchemaError);
    auto bad_product = j;
    bad_product["sentences"][0]["product_id"] = "nobody";
    CHECK_THROWS_AS(store_from_json(bad_product), SchemaError);
    auto bad_polarity = j;
    bad_polarity["sentences"][0]["items"][0]["polarity"] = "neutral";
    CHECK_THROWS_AS(store_from_json(bad_polarity), SchemaError);
    CHECK_THROWS_AS(parse_store("{"), SchemaError);
    CHECK_THROWS_AS(store_from_json(ojson::array()), SchemaError);
}

TEST_CASE("store lookups") {
    auto store = load_store(expected("store.json"));
    CHECK(store.product("alpha14"));
    CHECK_FALSE(store.product("zzz"));
    CHECK(store.sentences_for("alpha14", "screen", "resolution").size() == 2);
    CHECK(store.sentences_for("alpha14", "keyboard", "key").empty());
}

TEST_CASE("no store loaded") {
    ServiceApi api(planted_kit_ptr(), {});
    for (const auto* target : {"/products", "/products/alpha14/summary", "/products/a/aspects/b/c/sentences"}) {
        auto r = api.handle("GET", target);
        CHECK(r.status == 503);
        CHECK(r.body["error"]["code"] == "no_store");
        CHECK(validate("error", r.body).empty());
    }
}

TEST_CASE("GET /products") {
    ServiceApi api(planted_kit_ptr(), {});
    install_golden(api);
    auto r = api.handle("GET", "/products");
    CHECK(r.status == 200);
    CHECK(r.version == 1);
    CHECK(validate("products", r.body).empty());
    CHECK(r.body == read_json(expected("api_products.json")));

    ServiceApi empty(planted_kit_ptr(), {});
    empty.install({});
    auto e = empty.handle("GET", "/products");
    CHECK(e.status == 200);
    CHECK(e.body == ojson::array());
}

TEST_CASE("GET /products/{id}/summary") {
    ServiceApi api(planted_kit_ptr(), {});
    install_golden(api);
    auto r = api.handle("GET", "/products/alpha14/summary");
    CHECK(r.status == 200);
    CHECK(validate("product_summary", r.body).empty());
    CHECK(r.body == read_json(expected("api_summary_alpha14.json")));
    CHECK(r.body["categories"][0]["aspect"] == "screen");
    CHECK(r.body["categories"][0]["n_sentences"] == 5);
    CHECK(r.body["categories"][0]["rating"].get<double>() == doctest::Approx(4.2));

    auto missing = api.handle("GET", "/products/nope/summary");
    CHECK(missing.status == 404);
    CHECK(missing.body["error"]["code"] == "unknown_product");
}

TEST_CASE("product with zero mapped sentences") {
    auto store = load_store(expected("store.json"));
    summary::ProductSummary quiet = store.products[0];
    quiet.product_id = "quiet";
    quiet.total_sentences = 0;
    quiet.rating.reset();
    for (auto& c : quiet.categories) {
        c.n_pos = c.n_neg = c.n_sentences = 0;
        c.rating.reset();
        for (auto& ch : c.children) {
            ch.n_pos = ch.n_neg = ch.n_sentences = 0;
            ch.rating.reset();
        }
    }
    store.products.push_back(quiet);
    ServiceApi api(planted_kit_ptr(), {});
    api.install(store);
    auto r = api.handle("GET", "/products/quiet/summary");
    CHECK(r.status == 200);
    CHECK(validate("product_summary", r.body).empty());
    CHECK(r.body["rating"].is_null());
    CHECK(r.body["categories"][0]["rating"].is_null());
    auto list = api.handle("GET", "/products");
    CHECK(list.body[2]["top_categories"] == ojson::array());
}

TEST_CASE("GET sentences") {
    ServiceApi api(planted_kit_ptr(), {});
    install_golden(api);
    auto r = api.handle("GET", "/products/alpha14/aspects/screen/resolution/sentences");
    CHECK(r.status == 200);
    CHECK(validate("sentences", r.body).empty());
    CHECK(r.body == read_json(expected("api_sentences_alpha14_screen_resolution.json")));

    auto general = api.handle("GET", "/products/alpha14/aspects/screen/General/sentences");
    CHECK(general.body == read_json(expected("api_sentences_alpha14_screen_General.json")));

    auto encoded = api.handle("GET", "/products/alpha14/aspects/battery/battery%20life/sentences?x=1");
    CHECK(encoded.status == 200);
    REQUIRE(encoded.body.size() == 1);
    CHECK(encoded.body[0]["polarity"] == "negative");

    auto none = api.handle("GET", "/products/alpha14/aspects/keyboard/key/sentences");
    CHECK(none.status == 200);
    CHECK(none.body == ojson::array());

    auto wrong = api.handle("GET", "/products/alpha14/aspects/screen/key/sentences");
    CHECK(wrong.status == 404);
    CHECK(wrong.body["error"]["code"] == "unknown_aspect");
    CHECK(api.handle("GET", "/products/alpha14/aspects/nothing/General/sentences").status == 404);
    CHECK(api.handle("GET", "/products/nobody/aspects/screen/General/sentences").status == 404);
}

TEST_CASE("sentences list positives before negatives") {
    auto store = load_store(expected("store.json"));
    auto& items = store.sentences[{"alpha14", "screen", "General"}];
    std::reverse(items.begin(), items.end());
    ServiceApi api(planted_kit_ptr(), {});
    api.install(store);
    auto r = api.handle("GET", "/products/alpha14/aspects/screen/General/sentences");
    CHECK(r.body == read_json(expected("api_sentences_alpha14_screen_General.json")));
}

TEST_CASE("routing") {
    ServiceApi api(planted_kit_ptr(), {});
    install_golden(api);
    CHECK(api.handle("GET", "/nowhere").status == 404);
    CHECK(api.handle("DELETE", "/products").status == 404);
    CHECK(api.handle("GET", "/products/").status == 200);
    CHECK(percent_decode("a%20b%2Fc%zz+") == "a b/c%zz+");
    CHECK(percent_decode("%4") == "%4");
}

TEST_CASE("POST /pipeline/run") {
    auto dir = seopinion::test::scratch_dir("run");
    ServiceApi api(planted_kit_ptr(), {}, dir / "store.json");
    auto r = api.handle("POST", "/pipeline/run", ojson{{"corpus_path", planted_corpus()}}.dump());
    CHECK(r.status == 200);
    CHECK(validate("pipeline_run", r.body).empty());
    CHECK(r.body["run_id"] == "run-1");
    CHECK(r.body["products"] == 2);
    CHECK(std::filesystem::exists(dir / "store.json"));
    CHECK(seopinion::test::read_file(dir / "store.json") == seopinion::test::read_file(expected("store.json")));
    auto list = api.handle("GET", "/products");
    CHECK(list.version == r.body["store_version"].get<std::uint64_t>());
    CHECK(list.body == read_json(expected("api_products.json")));

    // Overrides change the result: a high clustering threshold leaves singletons.
    auto r2 = api.handle("POST", "/pipeline/run",
                         ojson{{"corpus_path", planted_corpus()}, {"config", {{"theta_clu", 0.95}}}}.dump());
    CHECK(r2.status == 200);
    CHECK(r2.body["run_id"] == "run-2");
    CHECK(api.snapshot()->store.hierarchy.categories.size() == 7);
}

TEST_CASE("POST errors") {
    ServiceApi api(planted_kit_ptr(), {});
    auto missing = api.handle("POST", "/pipeline/run", R"({"corpus_path": "/no/such/corpus.json"})");
    CHECK(missing.status == 400);
    CHECK(missing.body["error"]["code"] == "bad_corpus");
    CHECK(validate("error", missing.body).empty());
    CHECK(api.handle("POST", "/pipeline/run", "{").status == 400);
    CHECK(api.handle("POST", "/pipeline/run", "{}").status == 400);
    CHECK(api.handle("POST", "/pipeline/run", ojson{{"corpus_path", planted_corpus()}, {"config", {{"theta_map", 2}}}}.dump())
              .status == 400);
    CHECK(api.handle("POST", "/pipeline/run", ojson{{"corpus_path", planted_corpus()}, {"config", {{"bogus", 0.1}}}}.dump())
              .status == 400);
    CHECK(api.handle("POST", "/pipeline/run",
                     ojson{{"corpus_path", planted_corpus()}, {"config", {{"min_support", 0}}}}.dump())
              .status == 400);

    auto dir = seopinion::test::scratch_dir("badcorpus");
    std::ofstream(dir / "c.json") << R"([{"productDetails": {"Title": "x"}}])";
    auto bad = api.handle("POST", "/pipeline/run", ojson{{"corpus_path", (dir / "c.json").string()}}.dump());
    CHECK(bad.status == 400);
    CHECK(bad.body["error"]["code"] == "bad_corpus");
    CHECK_FALSE(api.snapshot());
}

TEST_CASE("second POST during a run gets 409") {
    ServiceApi api(planted_kit_ptr(), {});
    std::mutex m;
    std::condition_variable cv;
    bool inside = false, release = false;
    api.before_swap = [&] {
        std::unique_lock lock(m);
        inside = true;
        cv.notify_all();
        cv.wait(lock, [&] { return release; });
    };
    const auto body = ojson{{"corpus_path", planted_corpus()}}.dump();
    Response first;
    std::thread t([&] { first = api.handle("POST", "/pipeline/run", body); });
    {
        std::unique_lock lock(m);
        cv.wait(lock, [&] { return inside; });
    }
    auto second = api.handle("POST", "/pipeline/run", body);
    CHECK(second.status == 409);
    CHECK(second.body["error"]["code"] == "run_in_progress");
    CHECK_FALSE(api.snapshot());
    {
        std::lock_guard lock(m);
        release = true;
    }
    cv.notify_all();
    t.join();
    CHECK(first.status == 200);
    CHECK(api.snapshot());
}

TEST_CASE("readers see whole store versions during swaps") {
    auto a = load_store(expected("store.json"));
    auto b = a;
    b.products.pop_back();
    b.products[0].title = "Swapped";
    ServiceApi api(planted_kit_ptr(), {});
    // Odd versions hold store a, even versions store b.
    api.install(a);
    std::atomic<bool> stop{false};
    std::atomic<int> bad{0}, reads{0};
    std::vector<std::thread> readers;
    for (int t = 0; t < 4; ++t)
        readers.emplace_back([&] {
            while (!stop) {
                auto r = api.handle("GET", "/products");
                bool odd = r.version % 2 == 1;
                bool ok = r.status == 200 && r.body.size() == (odd ? 2u : 1u) &&
                          r.body[0]["title"] == (odd ? "Alpha Laptop 14" : "Swapped");
                if (!ok) ++bad;
                ++reads;
            }
        });
    for (int i = 0; i < 400; ++i) api.install(i % 2 ? a : b);
    while (reads < 1000) std::this_thread::yield();
    stop = true;
    for (auto& t : readers) t.join();
    CHECK(bad == 0);
}

TEST_CASE("http front end") {
    ServiceApi api(planted_kit_ptr(), {});
    install_golden(api);
    HttpServer server(api);
    int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread t([&] { server.serve(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto res = client.Get("/products");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value(kVersionHeader) == "1");
    CHECK(res->get_header_value("Content-Type").find("application/json") == 0);
    CHECK(ojson::parse(res->body) == read_json(expected("api_products.json")));

    auto s = client.Get("/products/alpha14/aspects/battery/battery%20life/sentences");
    REQUIRE(s);
    CHECK(s->status == 200);
    auto nf = client.Get("/products/zzz/summary");
    REQUIRE(nf);
    CHECK(nf->status == 404);
    auto post = client.Post("/pipeline/run", R"({"corpus_path": "/nope.json"})", "application/json");
    REQUIRE(post);
    CHECK(post->status == 400);

    auto url = "http://127.0.0.1:" + std::to_string(port);
    CHECK(ojson::parse(http_get(url + "/products")) == read_json(expected("api_products.json")));
    CHECK_THROWS_AS(http_get(url + "/products/zzz/summary"), IoError);
    CHECK_THROWS_AS(http_get("https://example.com/"), IoError);

    server.stop();
    t.join();
}

}  // TEST_SUITE
