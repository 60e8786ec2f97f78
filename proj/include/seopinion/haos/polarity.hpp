#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seopinion/haos/mapping.hpp"

namespace seopinion::haos {

enum class ModelKind { LexiconBaseline, LinearEmbedding };

std::string_view to_string(ModelKind kind);

/// Lexicon baseline, or a logistic-regression model over
/// concat(mean sentence vector, aspect vector) with weights [w(2*dim), bias].
struct PolarityModel {
    ModelKind kind = ModelKind::LexiconBaseline;
    std::size_t dim = 0;
    std::vector<double> weights;

    [[nodiscard]] bool trained() const { return kind == ModelKind::LexiconBaseline || weights.size() == 2 * dim + 1; }

    bool operator==(const PolarityModel&) const = default;
};

/// Sum of (pos - neg) over NOUN, ADJ, ADV and VERB tokens.
double lexicon_polarity(const nlp::TaggedSentence& sentence, const nlp::SentimentLexicon& lexicon);

/// concat(mean of the sentence's in-vocabulary word vectors, aspect vector).
nlp::Vector polarity_features(const nlp::TaggedSentence& sentence, std::string_view aspect,
                              const nlp::EmbeddingTable& embeddings);

/// w . x + b for a linear model.
double decision_value(const PolarityModel& model, const nlp::Vector& features);

/// Ties (score exactly 0) are positive. Throws UntrainedModel.
Label classify_polarity(const MappedOpinion& pair, const PolarityModel& model, const nlp::Toolkit& kit);
void classify_all(std::vector<MappedOpinion>& pairs, const PolarityModel& model, const nlp::Toolkit& kit);

struct TrainingExample {
    nlp::Vector features;
    Label label;
};

struct TrainParams {
    double learning_rate = 0.1;
    int max_epochs = 500;
    double tolerance = 1e-6;  // stop once an epoch lowers the loss by less
    std::uint64_t seed = 42;
    double init_scale = 0.01;  // initial weights are uniform in [-init_scale, init_scale]
};

/// Mean logistic loss and its gradient, with labels mapped to y = +1/-1.
double logistic_loss(const std::vector<double>& weights, const std::vector<TrainingExample>& data);
std::vector<double> logistic_gradient(const std::vector<double>& weights, const std::vector<TrainingExample>& data);

/// Full-batch gradient descent from a seeded random start. Throws
/// DegenerateData with fewer than two examples or a single class,
/// DimensionMismatch when a feature vector is not 2*dim long.
PolarityModel train_linear(const std::vector<TrainingExample>& data, std::size_t dim, const TrainParams& params = {});

PolarityModel train_polarity_model(const std::vector<std::pair<MappedOpinion, Label>>& pairs,
                                   const nlp::EmbeddingTable& embeddings, const TrainParams& params = {});

/// Text dump: a version line, then `kind`, `dim` and `weights` lines, at
/// full round-trip precision.
std::string serialize_model(const PolarityModel& model);
PolarityModel parse_model(std::string_view text);  // throws ParseError
void save_model(const PolarityModel& model, const std::filesystem::path& path);
PolarityModel load_model(const std::filesystem::path& path);

}  // namespace seopinion::haos
