#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seopinion::nlp {

enum class Tag { Noun, Adj, Verb, Adv, Other };

std::string_view to_string(Tag tag);
Tag tag_from_string(std::string_view name);  // "NOUN", "ADJ", ... ; throws ParseError

/// Reduces a Penn Treebank tag (NN, NNS, JJR, VBD, RB, ...) to the five-way set.
Tag tag_from_penn(std::string_view penn);

struct Token {
    std::string surface;
    std::string lemma;
    Tag tag = Tag::Other;

    bool operator==(const Token&) const = default;
};

struct TaggedSentence {
    std::string text;
    std::vector<Token> tokens;

    [[nodiscard]] bool has(Tag tag) const;
};

/// Light, tag-aware lemmatizer: plural stripping for nouns, -s/-ed/-ing
/// stripping with a restore list for verbs, lowercase for everything else.
std::string lemmatize(std::string_view word, Tag tag);

/// Lemma of a multiword aspect label ("Hard Drive Interfaces" -> "hard drive interface").
/// Punctuation and tokens without letters are dropped.
std::string lemmatize_phrase(std::string_view phrase);

/// POS tagger interface. External taggers plug in by mapping their own tag
/// set through tag_from_penn().
class Tagger {
public:
    virtual ~Tagger() = default;
    [[nodiscard]] virtual TaggedSentence tag(std::span<const std::string> tokens) const = 0;
};

/// Built-in baseline. Lookup order per token: closed-class word lists, the
/// frequency lexicon, suffix rules, then NOUN.
class LexiconTagger final : public Tagger {
public:
    LexiconTagger() = default;
    explicit LexiconTagger(std::unordered_map<std::string, Tag> lexicon) : lexicon_(std::move(lexicon)) {}

    /// Reads `word<TAB>TAG` lines (TAG one of NOUN, ADJ, VERB, ADV, OTHER).
    static LexiconTagger load(const std::filesystem::path& path);

    [[nodiscard]] TaggedSentence tag(std::span<const std::string> tokens) const override;
    [[nodiscard]] Tag tag_word(std::string_view token) const;
    [[nodiscard]] std::size_t lexicon_size() const { return lexicon_.size(); }

private:
    std::unordered_map<std::string, Tag> lexicon_;
};

}  // namespace seopinion::nlp
