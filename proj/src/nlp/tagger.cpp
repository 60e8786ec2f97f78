#include "seopinion/nlp/tagger.hpp"

#include <cctype>
#include <fstream>
#include <unordered_set>

#include "seopinion/error.hpp"
#include "seopinion/nlp/text.hpp"

namespace seopinion::nlp {

std::string_view to_string(Tag tag) {
    switch (tag) {
        case Tag::Noun: return "NOUN";
        case Tag::Adj: return "ADJ";
        case Tag::Verb: return "VERB";
        case Tag::Adv: return "ADV";
        case Tag::Other: return "OTHER";
    }
    return "OTHER";
}

Tag tag_from_string(std::string_view name) {
    if (name == "NOUN") return Tag::Noun;
    if (name == "ADJ") return Tag::Adj;
    if (name == "VERB") return Tag::Verb;
    if (name == "ADV") return Tag::Adv;
    if (name == "OTHER") return Tag::Other;
    throw ParseError("unknown tag '" + std::string(name) + "'");
}

Tag tag_from_penn(std::string_view penn) {
    auto starts = [&](std::string_view p) { return penn.substr(0, p.size()) == p; };
    if (starts("NN")) return Tag::Noun;
    if (starts("JJ")) return Tag::Adj;
    if (starts("VB") || penn == "MD") return Tag::Verb;
    if (starts("RB") || penn == "WRB") return Tag::Adv;
    return Tag::Other;
}

bool TaggedSentence::has(Tag tag) const {
    for (const auto& t : tokens)
        if (t.tag == tag) return true;
    return false;
}

namespace {

const std::unordered_set<std::string>& closed_other() {
    static const std::unordered_set<std::string> s{
        // determiners, pronouns
        "a", "an", "the", "this", "that", "these", "those", "my", "your", "his", "her", "its", "our", "their",
        "i", "me", "you", "he", "him", "she", "it", "we", "us", "they", "them", "myself", "yourself",
        "itself", "themselves", "ourselves", "himself", "herself", "mine", "yours", "ours", "theirs",
        "who", "whom", "whose", "which", "what", "some", "any", "each", "every", "either", "neither",
        "all", "both", "no", "another", "such", "one",
        // prepositions, conjunctions, particles
        "of", "in", "on", "at", "by", "for", "with", "about", "against", "between", "into", "through",
        "during", "before", "after", "above", "below", "to", "from", "up", "down", "out", "off", "over",
        "under", "within", "without", "upon", "across", "along", "among", "around", "behind", "beside",
        "beyond", "despite", "except", "like", "near", "per", "since", "than", "toward", "towards", "via",
        "and", "or", "but", "nor", "so", "yet", "if", "because", "while", "although", "though", "unless",
        "whether", "as", "until", "whereas", "there", "here",
    };
    return s;
}

const std::unordered_set<std::string>& closed_verb() {
    static const std::unordered_set<std::string> s{
        "is", "are", "was", "were", "be", "been", "being", "am", "has", "have", "had", "having",
        "do", "does", "did", "will", "would", "shall", "should", "can", "could", "may", "might", "must",
    };
    return s;
}

const std::unordered_set<std::string>& closed_adv() {
    static const std::unordered_set<std::string> s{
        "not", "very", "too", "really", "quite", "so", "also", "just", "even", "still", "never", "always",
        "often", "again", "already", "almost", "rather", "pretty", "extremely", "super", "highly",
    };
    return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() > suffix.size() + 1 && s.substr(s.size() - suffix.size()) == suffix;
}

bool has_alpha(std::string_view s) {
    for (unsigned char c : s)
        if (std::isalpha(c)) return true;
    return false;
}

}  // namespace

LexiconTagger LexiconTagger::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open POS lexicon " + path.string());
    std::unordered_map<std::string, Tag> lex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected word<TAB>TAG");
        lex.emplace(line.substr(0, tab), tag_from_string(line.substr(tab + 1)));
    }
    return LexiconTagger(std::move(lex));
}

Tag LexiconTagger::tag_word(std::string_view token) const {
    if (!is_word_token(token) || !has_alpha(token)) return Tag::Other;
    std::string w = to_lower(token);
    if (closed_other().count(w)) return Tag::Other;
    if (closed_verb().count(w)) return Tag::Verb;
    if (closed_adv().count(w)) return Tag::Adv;
    if (auto it = lexicon_.find(w); it != lexicon_.end()) return it->second;
    // A plural of a known noun is a noun.
    if (auto it = lexicon_.find(lemmatize(w, Tag::Noun)); it != lexicon_.end() && it->second == Tag::Noun)
        return Tag::Noun;
    if (ends_with(w, "ness") || ends_with(w, "tion") || ends_with(w, "ment") || ends_with(w, "ity"))
        return Tag::Noun;
    if (ends_with(w, "ful") || ends_with(w, "ous") || ends_with(w, "ive") || ends_with(w, "able") ||
        ends_with(w, "ible"))
        return Tag::Adj;
    if (ends_with(w, "ly")) return Tag::Adv;
    return Tag::Noun;
}

TaggedSentence LexiconTagger::tag(std::span<const std::string> tokens) const {
    TaggedSentence out;
    for (const auto& tok : tokens) {
        if (tok.empty()) continue;
        if (!out.text.empty()) out.text += ' ';
        out.text += tok;
        Tag t = tag_word(tok);
        out.tokens.push_back({tok, lemmatize(tok, t), t});
    }
    return out;
}

}  // namespace seopinion::nlp
