#pragma once

#include <filesystem>
#include <memory>

#include "seopinion/nlp/embeddings.hpp"
#include "seopinion/nlp/lexicon.hpp"
#include "seopinion/nlp/tagger.hpp"

namespace seopinion::nlp {

/// The shared, read-only language resources every pipeline stage needs.
struct Toolkit {
    std::shared_ptr<const Tagger> tagger;
    SentimentLexicon lexicon;
    EmbeddingTable embeddings;

    /// Preprocess, tokenize and tag one sentence.
    [[nodiscard]] TaggedSentence analyze(std::string_view sentence) const;
};

/// File names inside a resource directory.
inline constexpr const char* kPosLexiconFile = "pos_lexicon.tsv";
inline constexpr const char* kSentimentLexiconFile = "sentiment_lexicon.tsv";
inline constexpr const char* kEmbeddingsFile = "embeddings50.txt";
inline constexpr const char* kTrigramsFile = "trigrams.txt";  // optional

/// Loads the bundled resources from `dir`. When the directory has no POS
/// lexicon the tagger falls back to closed-class lists and suffix rules.
Toolkit load_toolkit(const std::filesystem::path& dir);

/// The compiled-in resource directory, overridable by SEOPINION_DATA_DIR.
std::filesystem::path default_data_dir();

}  // namespace seopinion::nlp
