#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seopinion::nlp {

using Vector = std::vector<double>;

struct Embedding {
    Vector vector;
    bool oov = false;
};

/// Static word vectors, plus an optional character-trigram table used for
/// out-of-vocabulary words.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    /// Throws DimensionMismatch if a vector's length differs from dim,
    /// ValidationError on NaN/Inf components or dim == 0.
    EmbeddingTable(std::size_t dim, std::unordered_map<std::string, Vector> vectors);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return vectors_.size(); }
    [[nodiscard]] const Vector* find(std::string_view word) const;

    /// Trigram keys include the boundary markers, e.g. "<sc", "scr", "en>".
    void set_trigrams(std::unordered_map<std::string, Vector> trigrams);
    [[nodiscard]] bool has_trigrams() const { return !trigrams_.empty(); }
    [[nodiscard]] const Vector* find_trigram(std::string_view gram) const;

private:
    std::size_t dim_ = 0;
    std::unordered_map<std::string, Vector> vectors_;
    std::unordered_map<std::string, Vector> trigrams_;
};

/// Text format, one entry per line: `word v1 v2 ... vd`. A leading
/// `<count> <dim>` header line (word2vec style) is accepted and skipped.
EmbeddingTable load_embeddings(const std::filesystem::path& path);
std::unordered_map<std::string, Vector> read_vector_file(const std::filesystem::path& path, std::size_t& dim);

/// The word's vector (case-insensitive); else the mean of its trigram vectors
/// when a trigram table is loaded; else a zero vector with oov = true.
Embedding embed(const EmbeddingTable& table, std::string_view word);

/// Mean of the in-vocabulary token vectors of a possibly multiword term.
/// Hyphenated tokens missing from the table are split at the hyphens.
Embedding embed_phrase(const EmbeddingTable& table, std::string_view phrase);

/// dot(u, v) / (|u| |v|). Throws DimensionMismatch or ZeroVector.
double cosine(std::span<const double> u, std::span<const double> v);

/// cosine() with ZeroVector mapped to 0.
double similarity(std::span<const double> u, std::span<const double> v);

}  // namespace seopinion::nlp
