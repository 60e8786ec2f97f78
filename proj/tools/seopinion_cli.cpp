// seopinion command-line driver: scrape | summarize | train | eval | serve

#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seopinion/error.hpp"
#include "seopinion/evalkit/cross_validation.hpp"
#include "seopinion/haos/labeled.hpp"
#include "seopinion/service/http_server.hpp"

namespace fs = std::filesystem;
using namespace seopinion;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& p, const std::string& text) {
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << text).flush()) throw IoError("cannot write " + tmp.string());
    }
    fs::rename(tmp, p);
}

// Thresholds shared by summarize and serve.
struct Thresholds {
    double theta_sel = 0.55;
    double theta_clu = 0.50;
    int min_support = 2;
    double theta_subj = 0.1;
    double theta_map = 0.7;
    std::string model;

    void add(CLI::App* app) {
        auto unit = CLI::Range(0.0, 0.999999);
        app->add_option("--theta-sel", theta_sel, "Popular-aspect similarity threshold")
            ->envname("SEOPINION_THETA_SEL")->check(unit)->capture_default_str();
        app->add_option("--theta-clu", theta_clu, "Clustering threshold")
            ->envname("SEOPINION_THETA_CLU")->check(unit)->capture_default_str();
        app->add_option("--min-support", min_support, "Support needed by out-of-vocabulary candidates")
            ->envname("SEOPINION_MIN_SUPPORT")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--theta-subj", theta_subj, "Subjectivity threshold")
            ->envname("SEOPINION_THETA_SUBJ")->check(unit)->capture_default_str();
        app->add_option("--theta-map", theta_map, "Embedding threshold for aspect matching")
            ->envname("SEOPINION_THETA_MAP")->check(unit)->capture_default_str();
        app->add_option("--model", model, "Trained polarity model (default: lexicon baseline)")
            ->envname("SEOPINION_MODEL")->check(CLI::ExistingFile);
    }

    summary::PipelineConfig config() const {
        summary::PipelineConfig c;
        c.hae = {theta_sel, theta_clu, min_support};
        c.theta_subj = theta_subj;
        c.theta_map = theta_map;
        if (!model.empty()) c.model = haos::load_model(model);
        return c;
    }
};

std::map<std::string, ingest::SiteConfig> load_configs(const std::vector<std::string>& paths) {
    std::map<std::string, ingest::SiteConfig> out;
    auto add = [&](const fs::path& p) {
        auto cfg = ingest::load_site_config(p);
        auto id = cfg.site_id;
        if (!out.emplace(id, std::move(cfg)).second) throw ValidationError("duplicate site_id '" + id + "' in " + p.string());
    };
    for (const auto& s : paths) {
        fs::path p(s);
        if (fs::is_directory(p)) {
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(p))
                if (e.path().extension() == ".rules") files.push_back(e.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) add(f);
        } else {
            add(p);
        }
    }
    return out;
}

std::pair<std::string, std::string> split_pair(const std::string& s, const std::string& what) {
    auto c = s.find(':');
    if (c == std::string::npos || c == 0 || c + 1 == s.size())
        throw ValidationError(what + " must look like SITE:VALUE, got '" + s + "'");
    return {s.substr(0, c), s.substr(c + 1)};
}

int run_scrape(const std::vector<std::string>& configs, const std::string& pages_dir,
               const std::vector<std::string>& pages, const std::vector<std::string>& urls,
               const std::string& product_type, const std::string& out) {
    auto cfgs = load_configs(configs);
    std::vector<ingest::Page> input;
    if (!pages_dir.empty()) {
        // pages_dir/<site_id>/*.html, sites and files in name order
        std::vector<fs::path> sites;
        for (const auto& e : fs::directory_iterator(pages_dir))
            if (e.is_directory()) sites.push_back(e.path());
        std::sort(sites.begin(), sites.end());
        for (const auto& site : sites) {
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(site))
                if (e.path().extension() == ".html" || e.path().extension() == ".htm") files.push_back(e.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) input.push_back({site.filename().string(), slurp(f), f.string()});
        }
    }
    for (const auto& p : pages) {
        auto [site, path] = split_pair(p, "--page");
        input.push_back({site, slurp(path), path});
    }
    for (const auto& u : urls) {
        auto [site, url] = split_pair(u, "--url");
        input.push_back({site, service::http_get(url), url});
    }
    auto build = ingest::build_corpus(input, cfgs, product_type, [](const ingest::SkippedPage& s) {
        std::cerr << "skipped " << s.origin << ": " << s.reason << "\n";
    });
    ingest::write_corpus(build.corpus, out);
    std::cout << "wrote " << build.corpus.records.size() << " records to " << out << " (" << build.skipped.size()
              << " pages skipped)\n";
    return 0;
}

int run_summarize(const std::string& data_dir, const std::string& corpus_path, const std::string& store_path,
                  const std::string& hierarchy_path, const Thresholds& th) {
    auto kit = nlp::load_toolkit(data_dir);
    auto corpus = ingest::read_corpus(corpus_path);
    auto result = summary::run_pipeline(corpus, kit, th.config());
    auto store = service::make_store(result);
    service::save_store(store, store_path);
    if (!hierarchy_path.empty()) write_text(hierarchy_path, hae::to_json(result.hierarchy).dump(2) + "\n");
    std::cout << result.hierarchy.categories.size() << " aspect categories, " << result.products.size()
              << " products; store written to " << store_path << "\n";
    for (const auto& p : result.products) {
        std::cout << "  " << p.summary.product_id << "  " << p.summary.total_sentences << " sentences";
        if (p.summary.rating) std::cout << "  rating " << std::fixed << std::setprecision(2) << *p.summary.rating;
        std::cout << "  " << p.summary.title.substr(0, 60) << "\n";
    }
    return 0;
}

int run_train(const std::string& data_dir, const std::string& labeled_path, const std::string& out,
              const haos::TrainParams& params) {
    auto kit = nlp::load_toolkit(data_dir);
    std::vector<std::pair<haos::MappedOpinion, haos::Label>> pairs;
    for (const auto& ex : haos::read_labeled(labeled_path)) pairs.emplace_back(haos::to_mapped(ex, kit), ex.label);
    auto model = haos::train_polarity_model(pairs, kit.embeddings, params);
    haos::save_model(model, out);
    std::cout << "trained on " << pairs.size() << " examples; model written to " << out << "\n";
    return 0;
}

struct EvalExample {
    haos::MappedOpinion pair;
    nlp::Vector features;
    bool positive;
};

int run_eval(const std::string& data_dir, const std::string& labeled_path, int k, int reps, std::uint64_t seed,
             int subsets, const std::vector<std::string>& kinds, const std::string& out,
             const haos::TrainParams& params) {
    auto kit = nlp::load_toolkit(data_dir);
    std::vector<EvalExample> data;
    for (const auto& ex : haos::read_labeled(labeled_path)) {
        auto m = haos::to_mapped(ex, kit);
        auto f = haos::polarity_features(m.sentence.tagged, m.aspect(), kit.embeddings);
        data.push_back({std::move(m), std::move(f), ex.label == haos::Label::Positive});
    }
    auto label_of = [](const EvalExample& e) { return e.positive; };

    eval::ClassifierFactory<EvalExample> lexicon = [&kit](const std::vector<EvalExample>&) {
        return eval::Predictor<EvalExample>([&kit](const EvalExample& e) {
            return haos::classify_polarity(e.pair, haos::PolarityModel{}, kit) == haos::Label::Positive;
        });
    };
    eval::ClassifierFactory<EvalExample> linear = [&kit, &params](const std::vector<EvalExample>& train) {
        std::vector<haos::TrainingExample> td;
        for (const auto& e : train)
            td.push_back({e.features, e.positive ? haos::Label::Positive : haos::Label::Negative});
        auto model = std::make_shared<haos::PolarityModel>(haos::train_linear(td, kit.embeddings.dim(), params));
        return eval::Predictor<EvalExample>(
            [model](const EvalExample& e) { return haos::decision_value(*model, e.features) >= 0.0; });
    };

    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    std::ostringstream table;
    table << std::left << std::setw(28) << "configuration" << std::right << std::setw(10) << "precision"
          << std::setw(10) << "recall" << std::setw(10) << "f1" << std::setw(10) << "accuracy" << "\n";
    auto add_row = [&](const std::string& name, const eval::MetricReport& r) {
        table << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4)
              << std::setw(10) << r.precision << std::setw(10) << r.recall << std::setw(10) << r.f1 << std::setw(10)
              << r.accuracy << "\n";
        auto j = eval::to_json(r);
        j["configuration"] = name;
        report.push_back(std::move(j));
    };

    for (const auto& kind : kinds) {
        const auto& factory = kind == "lexicon" ? lexicon : linear;
        add_row(kind, eval::kfold_cv(data, label_of, k, reps, seed, factory));
        if (subsets > 0) {
            std::vector<eval::MetricReport> per;
            auto balanced = eval::balanced_subsample(data, label_of, seed, subsets);
            for (std::size_t s = 0; s < balanced.size(); ++s)
                per.push_back(eval::kfold_cv(balanced[s], label_of, k, reps, seed + s + 1, factory));
            add_row(kind + " (balanced x" + std::to_string(subsets) + ")", eval::average(per, k, reps));
        }
    }
    std::cout << table.str();
    if (!out.empty()) {
        write_text(out, table.str());
        write_text(fs::path(out).replace_extension(".json"), report.dump(2) + "\n");
    }
    return 0;
}

service::HttpServer* g_server = nullptr;

int run_serve(const std::string& data_dir, const std::string& store_path, const std::string& corpus_path,
              const std::string& host, int port, const Thresholds& th) {
    auto kit = std::make_shared<const nlp::Toolkit>(nlp::load_toolkit(data_dir));
    service::ServiceApi api(kit, th.config(), store_path);
    if (!store_path.empty() && fs::exists(store_path)) {
        api.install(service::load_store(store_path));
        std::cerr << "loaded store " << store_path << "\n";
    }
    if (!corpus_path.empty()) {
        nlohmann::json req{{"corpus_path", corpus_path}};
        auto res = api.run_pipeline(req.dump());
        if (res.status != 200) throw Error("initial pipeline run failed: " + res.body.dump());
    }
    service::HttpServer server(api);
    int bound = server.bind(host, port);
    if (bound < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
    g_server = &server;
    std::signal(SIGINT, [](int) { if (g_server) g_server->stop(); });
    std::signal(SIGTERM, [](int) { if (g_server) g_server->stop(); });
    std::cerr << "listening on http://" << host << ":" << bound << "\n";
    bool ok = server.serve();
    g_server = nullptr;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seopinion: hierarchical aspect-based opinion summaries from product pages"};
    app.require_subcommand(1);
    std::string data_dir = nlp::default_data_dir().string();
    app.add_option("--data-dir", data_dir, "Directory with the tagger lexicon, sentiment lexicon and embeddings")
        ->envname("SEOPINION_DATA_DIR")
        ->capture_default_str();

    auto* scrape = app.add_subcommand("scrape", "Extract product records from saved pages");
    std::vector<std::string> configs, pages, urls;
    std::string pages_dir, product_type = "Laptop", corpus_out = "corpus.json";
    scrape->add_option("--config", configs, "Site rule file or directory of *.rules files")->required();
    scrape->add_option("--pages", pages_dir, "Directory laid out as <site_id>/*.html")->check(CLI::ExistingDirectory);
    scrape->add_option("--page", pages, "One page as SITE:PATH (repeatable)");
    scrape->add_option("--url", urls, "Fetch one page over plain HTTP as SITE:URL (repeatable)");
    scrape->add_option("--product-type", product_type)->capture_default_str();
    scrape->add_option("--corpus,-o", corpus_out, "Output corpus file")->envname("SEOPINION_CORPUS")->capture_default_str();

    auto* summarize = app.add_subcommand("summarize", "Run both phases and write the summary store");
    std::string corpus_in, store = "store.json", hierarchy_out;
    Thresholds th;
    summarize->add_option("--corpus", corpus_in, "Corpus file")->envname("SEOPINION_CORPUS")->required()->check(CLI::ExistingFile);
    summarize->add_option("--store", store, "Output store file")->envname("SEOPINION_STORE")->capture_default_str();
    summarize->add_option("--hierarchy", hierarchy_out, "Also write the aspect hierarchy here");
    th.add(summarize);

    haos::TrainParams tp;
    auto add_train_opts = [&tp](CLI::App* a) {
        a->add_option("--seed", tp.seed, "Seed for weight initialization")->capture_default_str();
        a->add_option("--learning-rate", tp.learning_rate)->capture_default_str();
        a->add_option("--max-epochs", tp.max_epochs)->capture_default_str();
    };

    auto* train = app.add_subcommand("train", "Train the linear polarity model from labeled pairs");
    std::string labeled, model_out = "polarity.model";
    train->add_option("--labeled", labeled, "TSV of label, aspect, sentence")->required()->check(CLI::ExistingFile);
    train->add_option("--out,-o", model_out)->capture_default_str();
    add_train_opts(train);

    auto* evalc = app.add_subcommand("eval", "Cross-validate polarity classifiers on labeled pairs");
    int k = 10, reps = 10, subsets = 0;
    std::uint64_t eval_seed = 1;
    std::vector<std::string> kinds{"lexicon", "linear"};
    std::string report_out;
    evalc->add_option("--labeled", labeled, "TSV of label, aspect, sentence")->required()->check(CLI::ExistingFile);
    evalc->add_option("--folds,-k", k)->check(CLI::Range(2, 1000))->capture_default_str();
    evalc->add_option("--reps", reps)->check(CLI::PositiveNumber)->capture_default_str();
    evalc->add_option("--cv-seed", eval_seed)->capture_default_str();
    evalc->add_option("--balanced", subsets, "Also average over this many balanced subsamples")->capture_default_str();
    evalc->add_option("--classifier", kinds)->check(CLI::IsMember({"lexicon", "linear"}))->capture_default_str();
    evalc->add_option("--report", report_out, "Write the table here and JSON next to it");
    add_train_opts(evalc);

    auto* serve = app.add_subcommand("serve", "Serve the summary store over HTTP");
    std::string host = "127.0.0.1", serve_corpus;
    int port = 8080;
    serve->add_option("--store", store, "Store file to load and to persist runs into")->envname("SEOPINION_STORE")->capture_default_str();
    serve->add_option("--corpus", serve_corpus, "Run the pipeline on this corpus at startup")->check(CLI::ExistingFile);
    serve->add_option("--host", host)->envname("SEOPINION_HOST")->capture_default_str();
    serve->add_option("--port", port)->envname("SEOPINION_PORT")->check(CLI::Range(0, 65535))->capture_default_str();
    th.add(serve);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*scrape) {
            if (pages_dir.empty() && pages.empty() && urls.empty())
                throw ValidationError("scrape needs --pages, --page or --url");
            return run_scrape(configs, pages_dir, pages, urls, product_type, corpus_out);
        }
        if (*summarize) return run_summarize(data_dir, corpus_in, store, hierarchy_out, th);
        if (*train) return run_train(data_dir, labeled, model_out, tp);
        if (*evalc) return run_eval(data_dir, labeled, k, reps, eval_seed, subsets, kinds, report_out, tp);
        if (*serve) return run_serve(data_dir, store, serve_corpus, host, port, th);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
