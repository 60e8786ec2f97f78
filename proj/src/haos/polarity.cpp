#include "seopinion/haos/polarity.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "seopinion/error.hpp"
#include "seopinion/nlp/text.hpp"

namespace seopinion::haos {

using nlp::Tag;

std::string_view to_string(ModelKind kind) {
    return kind == ModelKind::LexiconBaseline ? "lexicon_baseline" : "linear_embedding";
}

double lexicon_polarity(const nlp::TaggedSentence& sentence, const nlp::SentimentLexicon& lexicon) {
    double sum = 0.0;
    for (const auto& t : sentence.tokens) {
        if (t.tag == Tag::Other) continue;
        auto s = token_score(lexicon, t);
        sum += s.pos - s.neg;
    }
    return sum;
}

nlp::Vector polarity_features(const nlp::TaggedSentence& sentence, std::string_view aspect,
                              const nlp::EmbeddingTable& embeddings) {
    const auto dim = embeddings.dim();
    nlp::Vector x(2 * dim, 0.0);
    std::size_t n = 0;
    for (const auto& t : sentence.tokens) {
        if (!nlp::is_word_token(t.surface) || nlp::is_stop_word(nlp::to_lower(t.surface))) continue;
        auto e = nlp::embed_phrase(embeddings, t.surface);
        if (e.oov) continue;
        for (std::size_t k = 0; k < dim; ++k) x[k] += e.vector[k];
        ++n;
    }
    if (n > 0)
        for (std::size_t k = 0; k < dim; ++k) x[k] /= static_cast<double>(n);
    auto a = nlp::embed_phrase(embeddings, aspect);
    for (std::size_t k = 0; k < dim; ++k) x[dim + k] = a.vector[k];
    return x;
}

double decision_value(const PolarityModel& model, const nlp::Vector& features) {
    if (model.kind != ModelKind::LinearEmbedding || !model.trained())
        throw UntrainedModel("linear polarity model has no trained weights");
    if (features.size() + 1 != model.weights.size())
        throw nlp::DimensionMismatch("feature vector length " + std::to_string(features.size()) +
                                     " does not fit a model of dim " + std::to_string(model.dim));
    double z = model.weights.back();
    for (std::size_t k = 0; k < features.size(); ++k) z += model.weights[k] * features[k];
    return z;
}

Label classify_polarity(const MappedOpinion& pair, const PolarityModel& model, const nlp::Toolkit& kit) {
    double score = 0.0;
    if (model.kind == ModelKind::LexiconBaseline) {
        score = lexicon_polarity(pair.sentence.tagged, kit.lexicon);
    } else {
        if (!model.trained()) throw UntrainedModel("linear polarity model has no trained weights");
        if (model.dim != kit.embeddings.dim())
            throw nlp::DimensionMismatch("model dim " + std::to_string(model.dim) + " but embeddings have dim " +
                                         std::to_string(kit.embeddings.dim()));
        score = decision_value(model, polarity_features(pair.sentence.tagged, pair.aspect(), kit.embeddings));
    }
    return score >= 0.0 ? Label::Positive : Label::Negative;
}

void classify_all(std::vector<MappedOpinion>& pairs, const PolarityModel& model, const nlp::Toolkit& kit) {
    for (auto& p : pairs) p.polarity = classify_polarity(p, model, kit);
}

namespace {

double sign(Label l) { return l == Label::Positive ? 1.0 : -1.0; }

double margin(const std::vector<double>& w, const TrainingExample& ex) {
    double z = w.back();
    for (std::size_t k = 0; k < ex.features.size(); ++k) z += w[k] * ex.features[k];
    return sign(ex.label) * z;
}

// log(1 + exp(-m)) without overflow.
double softplus_neg(double m) { return m > 0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m)); }

// 1 / (1 + exp(m))
double sigmoid_neg(double m) {
    if (m >= 0) {
        double e = std::exp(-m);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(m));
}

}  // namespace

double logistic_loss(const std::vector<double>& weights, const std::vector<TrainingExample>& data) {
    double sum = 0.0;
    for (const auto& ex : data) sum += softplus_neg(margin(weights, ex));
    return sum / static_cast<double>(data.size());
}

std::vector<double> logistic_gradient(const std::vector<double>& weights, const std::vector<TrainingExample>& data) {
    std::vector<double> g(weights.size(), 0.0);
    for (const auto& ex : data) {
        double coef = -sign(ex.label) * sigmoid_neg(margin(weights, ex));
        for (std::size_t k = 0; k < ex.features.size(); ++k) g[k] += coef * ex.features[k];
        g.back() += coef;
    }
    for (auto& v : g) v /= static_cast<double>(data.size());
    return g;
}

PolarityModel train_linear(const std::vector<TrainingExample>& data, std::size_t dim, const TrainParams& params) {
    if (data.size() < 2) throw DegenerateData("need at least two training examples");
    bool pos = false, neg = false;
    for (const auto& ex : data) {
        if (ex.features.size() != 2 * dim)
            throw nlp::DimensionMismatch("training features must have length " + std::to_string(2 * dim));
        (ex.label == Label::Positive ? pos : neg) = true;
    }
    if (!pos || !neg) throw DegenerateData("training data has a single class");

    std::mt19937_64 rng(params.seed);
    std::vector<double> w(2 * dim + 1);
    for (auto& v : w) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
        v = (2.0 * u - 1.0) * params.init_scale;
    }
    double loss = logistic_loss(w, data);
    for (int epoch = 0; epoch < params.max_epochs; ++epoch) {
        auto g = logistic_gradient(w, data);
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= params.learning_rate * g[k];
        double next = logistic_loss(w, data);
        bool done = std::abs(loss - next) < params.tolerance;
        loss = next;
        if (done) break;
    }
    return {ModelKind::LinearEmbedding, dim, std::move(w)};
}

PolarityModel train_polarity_model(const std::vector<std::pair<MappedOpinion, Label>>& pairs,
                                   const nlp::EmbeddingTable& embeddings, const TrainParams& params) {
    std::vector<TrainingExample> data;
    data.reserve(pairs.size());
    for (const auto& [pair, label] : pairs)
        data.push_back({polarity_features(pair.sentence.tagged, pair.aspect(), embeddings), label});
    return train_linear(data, embeddings.dim(), params);
}

namespace {
constexpr std::string_view kModelHeader = "seopinion-polarity-model v1";
}

std::string serialize_model(const PolarityModel& model) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << kModelHeader << '\n' << "kind " << to_string(model.kind) << '\n' << "dim " << model.dim << '\n';
    out << "weights " << model.weights.size();
    for (double w : model.weights) out << ' ' << w;
    out << '\n';
    return out.str();
}

PolarityModel parse_model(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kModelHeader) throw ParseError("not a polarity model file (bad header)");
    PolarityModel m;
    std::string key, kind;
    if (!(in >> key >> kind) || key != "kind") throw ParseError("model file: expected 'kind'");
    if (kind == "lexicon_baseline")
        m.kind = ModelKind::LexiconBaseline;
    else if (kind == "linear_embedding")
        m.kind = ModelKind::LinearEmbedding;
    else
        throw ParseError("model file: unknown kind '" + kind + "'");
    if (!(in >> key >> m.dim) || key != "dim") throw ParseError("model file: expected 'dim'");
    std::size_t n = 0;
    if (!(in >> key >> n) || key != "weights") throw ParseError("model file: expected 'weights'");
    m.weights.resize(n);
    for (auto& w : m.weights) {
        std::string tok;
        if (!(in >> tok)) throw ParseError("model file: truncated weights");
        try {
            std::size_t used = 0;
            w = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("model file: bad weight '" + tok + "'");
        }
        if (!std::isfinite(w)) throw ParseError("model file: non-finite weight");
    }
    if (m.kind == ModelKind::LinearEmbedding && n != 2 * m.dim + 1)
        throw ParseError("model file: expected " + std::to_string(2 * m.dim + 1) + " weights");
    return m;
}

void save_model(const PolarityModel& model, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << serialize_model(model);
        if (!out.flush()) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

PolarityModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

}  // namespace seopinion::haos
