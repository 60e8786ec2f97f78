#include "seopinion/nlp/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace seopinion::nlp {

namespace {

bool alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Replacement {
    std::string_view from;
    std::string_view to;
};

// Longest first so ":-)" wins over ":)" style prefixes.
constexpr std::array<Replacement, 32> kEmoticons{{
    {">:-(", "angry"}, {":'-(", "sad"},  {":-)", "good"},  {":-(", "bad"},  {";-)", "good"},
    {":-D", "great"},  {":-P", "funny"}, {":-/", "unsure"}, {":-|", "neutral"}, {":'(", "sad"},
    {">:(", "angry"},  {"^_^", "happy"}, {"-_-", "annoyed"}, {"T_T", "sad"}, {"=)", "good"},
    {":)", "good"},    {":(", "bad"},    {";)", "good"},   {":D", "great"},  {":P", "funny"},
    {":p", "funny"},   {":/", "unsure"}, {":|", "neutral"}, {"xD", "funny"}, {"XD", "funny"},
    {":O", "surprised"}, {":o", "surprised"}, {"<3", "love"}, {"</3", "heartbroken"}, {":*", "love"},
    {"=(", "bad"},     {":]", "good"},
}};

const std::unordered_map<std::string, std::string>& slang() {
    static const std::unordered_map<std::string, std::string> m{
        {"gr8", "great"},      {"gr8t", "great"},   {"grt", "great"},       {"luv", "love"},
        {"lov", "love"},       {"gud", "good"},     {"gd", "good"},         {"nyc", "nice"},
        {"awsm", "awesome"},   {"awsome", "awesome"}, {"kewl", "cool"},     {"b4", "before"},
        {"2day", "today"},     {"2morrow", "tomorrow"}, {"2nite", "tonight"}, {"l8r", "later"},
        {"thx", "thanks"},     {"thnx", "thanks"},  {"tnx", "thanks"},      {"pls", "please"},
        {"plz", "please"},     {"u", "you"},        {"ur", "your"},         {"r", "are"},
        {"coz", "because"},  {"cuz", "because"},     {"bcoz", "because"},
        {"bc", "because"},     {"dont", "do not"},  {"cant", "can not"},    {"wont", "will not"},
        {"didnt", "did not"},  {"doesnt", "does not"}, {"isnt", "is not"},  {"wasnt", "was not"},
        {"aint", "is not"},    {"gonna", "going to"}, {"wanna", "want to"}, {"gotta", "got to"},
        {"kinda", "kind of"},  {"sorta", "sort of"}, {"v", "very"},         {"vry", "very"},
        {"gr8est", "greatest"}, {"prob", "problem"}, {"probs", "problems"}, {"batt", "battery"},
        {"amazin", "amazing"}, {"wrks", "works"},   {"wrk", "work"},        {"ok", "okay"},
        {"k", "okay"},         {"yr", "year"},      {"yrs", "years"},       {"hrs", "hours"},
        {"hr", "hour"},        {"mins", "minutes"}, {"min", "minute"},      {"secs", "seconds"},
        {"sec", "second"},
    };
    return m;
}

const std::unordered_map<std::string, std::string>& acronyms() {
    static const std::unordered_map<std::string, std::string> m{
        {"imo", "in my opinion"},     {"imho", "in my humble opinion"}, {"btw", "by the way"},
        {"fyi", "for your information"}, {"tbh", "to be honest"},       {"afaik", "as far as i know"},
        {"asap", "as soon as possible"}, {"lol", "laughing"},           {"omg", "oh my god"},
        {"idk", "i do not know"},     {"smh", "disappointed"},          {"irl", "in real life"},
        {"w/o", "without"},           {"wtf", "awful"},                 {"vfm", "value for money"},
        {"vgood", "very good"},       {"aka", "also known as"},         {"diy", "do it yourself"},
        {"nvm", "never mind"},        {"ftw", "for the win"},           {"jk", "just kidding"},
    };
    return m;
}

const std::unordered_map<std::string, std::string>& contractions() {
    static const std::unordered_map<std::string, std::string> m{
        {"can't", "can not"},   {"cannot", "can not"},  {"won't", "will not"},   {"shan't", "shall not"},
        {"ain't", "is not"},    {"it's", "it is"},      {"that's", "that is"},   {"there's", "there is"},
        {"here's", "here is"},  {"what's", "what is"},  {"who's", "who is"},     {"where's", "where is"},
        {"how's", "how is"},    {"he's", "he is"},      {"she's", "she is"},     {"let's", "let us"},
        {"y'all", "you all"},   {"o'clock", "oclock"},
    };
    return m;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Rewrites one lowercase word token; may return several words.
std::string expand_contraction(const std::string& w) {
    if (w.find('\'') == std::string::npos) return w;
    const auto& m = contractions();
    if (auto it = m.find(w); it != m.end()) return it->second;
    struct Suffix {
        std::string_view from, to;
    };
    static constexpr std::array<Suffix, 7> kSuffixes{{
        {"n't", " not"}, {"'re", " are"}, {"'ve", " have"}, {"'ll", " will"},
        {"'d", " would"}, {"'m", " am"},  {"'s", ""},
    }};
    for (const auto& s : kSuffixes) {
        if (ends_with(w, s.from) && w.size() > s.from.size()) {
            return w.substr(0, w.size() - s.from.size()) + std::string(s.to);
        }
    }
    return w;
}

bool is_number(std::string_view tok) {
    if (tok.empty() || !digit(tok.front()) || !digit(tok.back())) return false;
    return std::all_of(tok.begin(), tok.end(), [](char c) { return digit(c) || c == '.' || c == ',' || c == ':'; });
}

std::string replace_curly_quotes(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        // U+2018 / U+2019
        if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
            static_cast<unsigned char>(in[i + 1]) == 0x80 &&
            (static_cast<unsigned char>(in[i + 2]) == 0x98 || static_cast<unsigned char>(in[i + 2]) == 0x99)) {
            out += '\'';
            i += 2;
            continue;
        }
        out += in[i];
    }
    return out;
}

std::string strip_urls(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    auto starts = [&](std::size_t at, std::string_view p) {
        if (in.size() - at < p.size()) return false;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (std::tolower(static_cast<unsigned char>(in[at + k])) != p[k]) return false;
        return true;
    };
    while (i < in.size()) {
        bool boundary = i == 0 || !alnum(in[i - 1]);
        if (boundary && (starts(i, "http://") || starts(i, "https://") || starts(i, "www."))) {
            while (i < in.size() && !space(in[i])) ++i;
            out += ' ';
            continue;
        }
        out += in[i++];
    }
    return out;
}

std::string strip_non_ascii(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    bool in_run = false;
    for (char c : in) {
        if (static_cast<unsigned char>(c) >= 0x80) {
            if (!in_run) out += ' ';
            in_run = true;
            continue;
        }
        in_run = false;
        out += c;
    }
    return out;
}

std::string expand_emoticons(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        bool matched = false;
        for (const auto& e : kEmoticons) {
            if (in.substr(i, e.from.size()) != e.from) continue;
            // Emoticons with letters or digits must not sit inside a word.
            bool has_alnum = std::any_of(e.from.begin(), e.from.end(), alnum);
            if (has_alnum) {
                if (alnum(e.from.front()) && i > 0 && alnum(in[i - 1])) continue;
                std::size_t after = i + e.from.size();
                if (alnum(e.from.back()) && after < in.size() && alnum(in[after])) continue;
            }
            out += ' ';
            out += e.to;
            out += ' ';
            i += e.from.size();
            matched = true;
            break;
        }
        if (!matched) out += in[i++];
    }
    return out;
}

// Words: alnum runs joined by internal ' or -, and digit groups joined by . , :
// Everything else that is not whitespace forms punctuation runs.
std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (space(s[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (alnum(s[i])) {
            while (i < s.size()) {
                if (alnum(s[i])) {
                    ++i;
                } else if ((s[i] == '\'' || s[i] == '-') && i + 1 < s.size() && alnum(s[i + 1]) && i > start) {
                    ++i;
                } else if ((s[i] == '.' || s[i] == ',' || s[i] == ':') && i > start && digit(s[i - 1]) &&
                           i + 1 < s.size() && digit(s[i + 1])) {
                    ++i;
                } else {
                    break;
                }
            }
        } else {
            while (i < s.size() && !space(s[i]) && !alnum(s[i])) ++i;
        }
        out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> s{
        "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc", "e.g", "i.e", "eg", "ie",
        "approx", "inc", "ltd", "co", "corp", "no", "nos", "fig", "est", "dept", "jan", "feb", "mar",
        "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec", "u.s", "a.m", "p.m", "max", "min",
    };
    return s;
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_word_token(std::string_view token) { return !token.empty() && alnum(token.front()); }

std::string preprocess(std::string_view text) {
    std::string s = strip_urls(replace_curly_quotes(text));
    // Removing non-ASCII bytes can expose a URL ("httpé://..."), so URLs go twice.
    s = strip_urls(strip_non_ascii(s));
    s = expand_emoticons(s);

    std::vector<std::string> words;
    for (const auto& tok : split_tokens(s)) {
        if (!is_word_token(tok)) {
            words.push_back(tok);
            continue;
        }
        std::string lw = to_lower(tok);
        if (auto it = slang().find(lw); it != slang().end()) {
            lw = it->second;
        } else if (auto it2 = acronyms().find(lw); it2 != acronyms().end()) {
            lw = it2->second;
        }
        lw = expand_contraction(lw);
        for (auto& piece : split_tokens(lw)) {
            if (is_number(piece)) continue;
            words.push_back(std::move(piece));
        }
    }

    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += to_lower(w);
    }
    return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    auto emit = [&](std::size_t from, std::size_t to) {
        while (from < to && space(text[from])) ++from;
        while (to > from && space(text[to - 1])) --to;
        if (to > from) out.emplace_back(text.substr(from, to - from));
    };
    std::size_t start = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') {
            ++i;
            continue;
        }
        std::size_t run_start = i;
        while (i < text.size() && (text[i] == '.' || text[i] == '!' || text[i] == '?')) ++i;
        while (i < text.size() && (text[i] == '"' || text[i] == '\'' || text[i] == ')')) ++i;
        if (i < text.size() && !space(text[i])) continue;

        if (text[run_start] == '.' && i - run_start == 1) {
            // the word before the period
            std::size_t w = run_start;
            while (w > start && !space(text[w - 1])) --w;
            std::string word = to_lower(text.substr(w, run_start - w));
            while (!word.empty() && !alnum(word.front())) word.erase(word.begin());
            bool initial = word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]));
            if (initial || abbreviations().count(word)) {
                std::size_t next = i;
                while (next < text.size() && space(text[next])) ++next;
                bool capital_follows = next < text.size() && std::isupper(static_cast<unsigned char>(text[next]));
                // "etc." may still end a sentence
                if (!(word == "etc" && capital_follows)) continue;
            }
        }
        emit(start, i);
        start = i;
    }
    emit(start, text.size());
    return out;
}

std::vector<std::string> tokenize(std::string_view sentence) { return split_tokens(sentence); }

bool is_stop_word(std::string_view w) {
    static const std::unordered_set<std::string_view> kStop{
        "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your", "yours", "yourself",
        "yourselves", "he", "him", "his", "himself", "she", "her", "hers", "herself", "it", "its", "itself",
        "they", "them", "their", "theirs", "themselves", "what", "which", "who", "whom", "this", "that",
        "these", "those", "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had",
        "having", "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or", "because", "as",
        "until", "while", "of", "at", "by", "for", "with", "about", "against", "between", "into", "through",
        "during", "before", "after", "above", "below", "to", "from", "up", "down", "in", "out", "on", "off",
        "over", "under", "again", "further", "then", "once", "here", "there", "when", "where", "why", "how",
        "all", "any", "both", "each", "few", "more", "most", "other", "some", "such", "no", "nor", "not",
        "only", "own", "same", "so", "than", "too", "very", "s", "t", "can", "will", "just", "don", "should",
        "now", "d", "ll", "m", "o", "re", "ve", "y", "also", "would", "could", "may", "might", "must",
        "shall", "one", "ones", "thing", "things", "lot", "lots", "way", "day", "days", "time", "times",
        "etc", "get", "got", "let", "us", "yet", "ever", "even", "still",
    };
    return kStop.count(w) > 0;
}

}  // namespace seopinion::nlp
