#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "seopinion/nlp/tagger.hpp"
#include "seopinion/nlp/text.hpp"

namespace seopinion::nlp {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Plural-looking words that are not plurals.
const std::unordered_set<std::string>& singular_s() {
    static const std::unordered_set<std::string> s{
        "this", "his", "its", "is", "was", "has", "does", "us", "yes", "bus", "gps", "bios", "os", "ios",
        "news", "series", "species", "lens", "always", "perhaps", "plus", "minus", "thus", "chassis",
        "analysis", "basis", "canvas", "gas", "atlas", "alias", "status", "virus", "campus", "bonus",
        "focus", "radius", "apparatus", "corpus", "cons", "pros", "windows", "mathematics", "physics",
        "electronics", "graphics", "acoustics", "ergonomics", "logistics", "headphones", "earphones",
        "glasses", "pants", "scissors", "means", "thanks", "aids", "whereas", "across", "express", "dvds",
    };
    return s;
}

const std::unordered_map<std::string, std::string>& irregular_nouns() {
    static const std::unordered_map<std::string, std::string> m{
        {"children", "child"}, {"men", "man"},       {"women", "woman"}, {"people", "person"},
        {"feet", "foot"},      {"teeth", "tooth"},   {"mice", "mouse"},  {"geese", "goose"},
        {"knives", "knife"},   {"lives", "life"},    {"wives", "wife"},  {"leaves", "leaf"},
        {"shelves", "shelf"},  {"halves", "half"},   {"data", "data"},   {"media", "media"},
        {"criteria", "criterion"}, {"indices", "index"}, {"matrices", "matrix"}, {"vertices", "vertex"},
        {"batteries", "battery"}, {"caches", "cache"}, {"niches", "niche"}, {"heroes", "hero"},
        {"potatoes", "potato"},
    };
    return m;
}

const std::unordered_map<std::string, std::string>& irregular_verbs() {
    static const std::unordered_map<std::string, std::string> m{
        {"is", "be"},       {"are", "be"},      {"was", "be"},       {"were", "be"},     {"am", "be"},
        {"been", "be"},     {"being", "be"},    {"has", "have"},     {"had", "have"},    {"having", "have"},
        {"does", "do"},     {"did", "do"},      {"done", "do"},      {"doing", "do"},    {"went", "go"},
        {"gone", "go"},     {"goes", "go"},     {"made", "make"},    {"got", "get"},     {"gotten", "get"},
        {"bought", "buy"},  {"came", "come"},   {"took", "take"},    {"taken", "take"},  {"gave", "give"},
        {"given", "give"},  {"said", "say"},    {"saw", "see"},      {"seen", "see"},    {"felt", "feel"},
        {"kept", "keep"},   {"left", "leave"},  {"thought", "think"}, {"ran", "run"},    {"broke", "break"},
        {"broken", "break"}, {"died", "die"},   {"dies", "die"},     {"dying", "die"},   {"lying", "lie"},
        {"sent", "send"},   {"spent", "spend"}, {"built", "build"},  {"paid", "pay"},    {"found", "find"},
        {"held", "hold"},   {"sat", "sit"},     {"stood", "stand"},  {"wrote", "write"}, {"written", "write"},
        {"arrived", "arrive"}, {"loved", "love"}, {"liked", "like"}, {"used", "use"},    {"charged", "charge"},
        {"charging", "charge"}, {"using", "use"}, {"making", "make"}, {"taking", "take"}, {"having", "have"},
        {"shipped", "ship"}, {"stopped", "stop"}, {"planned", "plan"}, {"fitted", "fit"},
    };
    return m;
}

// -ing / -ed words that are not inflections of a shorter stem.
const std::unordered_set<std::string>& keep_as_is() {
    static const std::unordered_set<std::string> s{
        "thing", "things", "string", "ring", "king", "spring", "sing", "bring", "wing", "swing",
        "nothing", "something", "anything", "everything", "morning", "evening", "ceiling", "during",
        "feed", "need", "speed", "bed", "red", "shed", "seed", "bleed", "breed", "embed", "wed",
        "hundred", "sacred", "naked", "wicked", "rugged", "ragged", "kindred", "bred", "sled", "led",
    };
    return s;
}

// Stems that regain a final "e" after -ed/-ing removal, beyond the CVC rule.
bool needs_final_e(const std::string& stem) {
    if (stem.size() < 2) return false;
    char last = stem.back();
    if (last == 'v' || last == 'c' || last == 'z' || last == 'u') return true;
    if (ends_with(stem, "rg") || ends_with(stem, "dg")) return true;
    // consonant-vowel-consonant with a "silent e" final consonant: hat -> hate, clos -> close
    if (stem.size() >= 3 && !vowel(last) && vowel(stem[stem.size() - 2]) && !vowel(stem[stem.size() - 3])) {
        static const std::string kNoE = "wxynrlm";
        if (kNoE.find(last) != std::string::npos) return false;
        return stem.size() <= 5;
    }
    return false;
}

std::string strip_inflection(const std::string& w, std::string_view suffix) {
    std::string stem = w.substr(0, w.size() - suffix.size());
    std::size_t n = stem.size();
    if (n >= 3 && stem[n - 1] == stem[n - 2] && !vowel(stem[n - 1])) {
        static const std::string kKeepDouble = "lsz";
        if (kKeepDouble.find(stem[n - 1]) == std::string::npos) {
            stem.pop_back();
            return stem;
        }
        return stem;
    }
    if (needs_final_e(stem)) stem += 'e';
    return stem;
}

std::string noun_lemma(const std::string& w) {
    if (auto it = irregular_nouns().find(w); it != irregular_nouns().end()) return it->second;
    if (w.size() <= 3 || singular_s().count(w)) return w;
    if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is") || ends_with(w, "ous")) return w;
    if (ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
    for (auto es : {"ches", "shes", "sses", "xes", "zzes"}) {
        if (ends_with(w, es)) return w.substr(0, w.size() - 2);
    }
    if (w.back() == 's') return w.substr(0, w.size() - 1);
    return w;
}

std::string verb_lemma(const std::string& w) {
    if (auto it = irregular_verbs().find(w); it != irregular_verbs().end()) return it->second;
    if (keep_as_is().count(w)) return w;
    if (ends_with(w, "ing") && w.size() >= 6) return strip_inflection(w, "ing");
    if (ends_with(w, "ied") && w.size() >= 5) return w.substr(0, w.size() - 3) + "y";
    if (ends_with(w, "ed") && w.size() >= 5) return strip_inflection(w, "ed");
    if (ends_with(w, "ies") && w.size() >= 5) return w.substr(0, w.size() - 3) + "y";
    if (w.size() > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is")) {
        for (auto es : {"ches", "shes", "sses", "xes", "zzes"})
            if (ends_with(w, es)) return w.substr(0, w.size() - 2);
        return w.substr(0, w.size() - 1);
    }
    return w;
}

}  // namespace

std::string lemmatize(std::string_view word, Tag tag) {
    std::string w = to_lower(word);
    if (!is_word_token(w)) return w;
    switch (tag) {
        case Tag::Noun: return noun_lemma(w);
        case Tag::Verb: return verb_lemma(w);
        default: return w;
    }
}

std::string lemmatize_phrase(std::string_view phrase) {
    std::string out;
    for (const auto& tok : tokenize(phrase)) {
        if (!is_word_token(tok)) continue;
        if (std::none_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isalpha(c); })) continue;
        if (!out.empty()) out += ' ';
        out += lemmatize(tok, Tag::Noun);
    }
    return out;
}

}  // namespace seopinion::nlp
