#include "seopinion/nlp/lexicon.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "seopinion/error.hpp"

namespace seopinion::nlp {

namespace {

void check(const std::string& word, Polarity p) {
    auto ok = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (!ok(p.pos) || !ok(p.neg))
        throw ValidationError("lexicon entry '" + word + "' has a score outside [0, 1]");
}

double number(std::string_view s, const std::string& where) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(where + ": bad number '" + std::string(s) + "'");
    return v;
}

}  // namespace

SentimentLexicon::SentimentLexicon(std::unordered_map<std::string, Polarity> entries) : entries_(std::move(entries)) {
    for (const auto& [w, p] : entries_) check(w, p);
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sentiment lexicon " + path.string());
    std::unordered_map<std::string, Polarity> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto where = path.string() + ":" + std::to_string(lineno);
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t1 == 0 || t2 == std::string::npos) throw ParseError(where + ": expected lemma<TAB>pos<TAB>neg");
        std::string_view view(line);
        Polarity p{number(view.substr(t1 + 1, t2 - t1 - 1), where), number(view.substr(t2 + 1), where)};
        auto word = line.substr(0, t1);
        check(word, p);
        entries.insert_or_assign(std::move(word), p);
    }
    SentimentLexicon lex;
    lex.entries_ = std::move(entries);
    return lex;
}

Polarity SentimentLexicon::score(std::string_view lemma) const {
    auto it = entries_.find(std::string(lemma));
    return it == entries_.end() ? Polarity{} : it->second;
}

bool SentimentLexicon::contains(std::string_view lemma) const { return entries_.count(std::string(lemma)) > 0; }

}  // namespace seopinion::nlp
