#include "seopinion/nlp/toolkit.hpp"

#include <cstdlib>

#include "seopinion/nlp/text.hpp"

#ifndef SEOPINION_DEFAULT_DATA_DIR
#define SEOPINION_DEFAULT_DATA_DIR "data"
#endif

namespace seopinion::nlp {

TaggedSentence Toolkit::analyze(std::string_view sentence) const {
    auto tokens = tokenize(preprocess(sentence));
    return tagger->tag(tokens);
}

Toolkit load_toolkit(const std::filesystem::path& dir) {
    Toolkit kit;
    auto pos = dir / kPosLexiconFile;
    if (std::filesystem::exists(pos))
        kit.tagger = std::make_shared<LexiconTagger>(LexiconTagger::load(pos));
    else
        kit.tagger = std::make_shared<LexiconTagger>();
    kit.lexicon = SentimentLexicon::load(dir / kSentimentLexiconFile);
    kit.embeddings = load_embeddings(dir / kEmbeddingsFile);
    if (auto tri = dir / kTrigramsFile; std::filesystem::exists(tri)) {
        std::size_t dim = 0;
        kit.embeddings.set_trigrams(read_vector_file(tri, dim));
    }
    return kit;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("SEOPINION_DATA_DIR"); env && *env) return env;
    return SEOPINION_DEFAULT_DATA_DIR;
}

}  // namespace seopinion::nlp
