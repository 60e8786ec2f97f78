#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>

namespace seopinion::nlp {

struct Polarity {
    double pos = 0.0;
    double neg = 0.0;

    bool operator==(const Polarity&) const = default;
};

/// Word-level prior polarities, pos and neg each in [0, 1].
class SentimentLexicon {
public:
    SentimentLexicon() = default;
    /// Throws ValidationError when a score falls outside [0, 1] or is not finite.
    explicit SentimentLexicon(std::unordered_map<std::string, Polarity> entries);

    /// Reads `lemma<TAB>pos<TAB>neg` lines. Blank lines and '#' comments are skipped.
    static SentimentLexicon load(const std::filesystem::path& path);

    [[nodiscard]] Polarity score(std::string_view lemma) const;
    [[nodiscard]] bool contains(std::string_view lemma) const;
    [[nodiscard]] std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, Polarity> entries_;
};

inline Polarity lexicon_score(const SentimentLexicon& lexicon, std::string_view lemma) {
    return lexicon.score(lemma);
}

}  // namespace seopinion::nlp
