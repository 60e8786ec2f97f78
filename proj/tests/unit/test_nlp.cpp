#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "seopinion/error.hpp"
#include "seopinion/ingestion/corpus.hpp"
#include "seopinion/nlp/embeddings.hpp"
#include "seopinion/nlp/lexicon.hpp"
#include "seopinion/nlp/tagger.hpp"
#include "seopinion/nlp/text.hpp"
#include "seopinion/nlp/toolkit.hpp"
#include "support/fixtures.hpp"

using namespace seopinion;
using namespace seopinion::nlp;
using seopinion::test::bundled_kit;

namespace {

std::vector<Tag> tags_of(const std::string& sentence) {
    std::vector<Tag> out;
    for (const auto& t : bundled_kit().analyze(sentence).tokens) out.push_back(t.tag);
    return out;
}

// Straight scan of the raw data file, independent of the loader.
std::vector<double> raw_vector(const std::string& word) {
    std::ifstream in(default_data_dir() / kEmbeddingsFile);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string w;
        ss >> w;
        if (w != word) continue;
        std::vector<double> v;
        double x;
        while (ss >> x) v.push_back(x);
        return v;
    }
    return {};
}

double raw_cosine(const std::vector<double>& u, const std::vector<double>& v) {
    double d = 0, nu = 0, nv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    return d / std::sqrt(nu * nv);
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto dir = seopinion::test::scratch_dir("nlp-" + name);
    auto p = dir / name;
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_SUITE("nlp") {

TEST_CASE("preprocess applies the documented rule sequence") {
    CHECK(preprocess("Check https://x.co it's gr8!!!") == "check it is great !!!");
    CHECK(preprocess("") == "");
    CHECK(preprocess("costs 100 dollars") == "costs dollars");
    CHECK(preprocess("It isn't bad :)") == "it is not bad good");
    CHECK(preprocess("Caf\xC3\xA9 time") == "caf time");
    CHECK(preprocess("www.example.com rocks") == "rocks");
}

TEST_CASE("preprocess is idempotent on the fixture reviews") {
    auto corpus = ingest::read_corpus(seopinion::test::fixtures_dir() / "golden" / "hp14_corpus.json");
    auto planted = ingest::read_corpus(seopinion::test::fixtures_dir() / "planted" / "corpus.json");
    for (const auto* c : {&corpus, &planted})
        for (const auto& r : c->records)
            for (const auto& text : r.reviews) {
                CAPTURE(text);
                auto once = preprocess(text);
                CHECK(preprocess(once) == once);
            }
    for (const auto* s : {"gr8 :) isn't", "a.b,c!!", "  ", "3.5GHz 14-inch", "can't won't"}) {
        CAPTURE(s);
        CHECK(preprocess(preprocess(s)) == preprocess(s));
    }
}

TEST_CASE("sentence splitting") {
    CHECK(split_sentences("Nice laptop. Fast boot!") == std::vector<std::string>{"Nice laptop.", "Fast boot!"});
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("Buy it, e.g. for school. Done") == std::vector<std::string>{"Buy it, e.g. for school.", "Done"});
    CHECK(split_sentences("Clocked at 3.5 GHz. Great") == std::vector<std::string>{"Clocked at 3.5 GHz.", "Great"});
}

TEST_CASE("tokenization") {
    CHECK(tokenize("it is fast") == std::vector<std::string>{"it", "is", "fast"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("battery-life, it's great!") ==
          std::vector<std::string>{"battery-life", ",", "it's", "great", "!"});
    CHECK(is_word_token("battery-life"));
    CHECK_FALSE(is_word_token("!!"));
}

TEST_CASE("baseline tagger") {
    CHECK(tags_of("the screen is nice") == std::vector<Tag>{Tag::Other, Tag::Noun, Tag::Verb, Tag::Adj});
    LexiconTagger bare;
    CHECK(bare.tag_word("resolution") == Tag::Noun);
    CHECK(bare.tag_word("wonderful") == Tag::Adj);
    CHECK(bare.tag_word("quickly") == Tag::Adv);
    CHECK(bare.tag_word("glorp") == Tag::Noun);
    CHECK(bare.tag_word(",") == Tag::Other);
    std::vector<std::string> none;
    CHECK(bundled_kit().tagger->tag(none).tokens.empty());
    CHECK(bundled_kit().lexicon.size() > 0);
}

TEST_CASE("tagger is total and deterministic") {
    auto a = bundled_kit().analyze("It is lightweight, has a beautiful and vibrantly colored screen!");
    auto b = bundled_kit().analyze("It is lightweight, has a beautiful and vibrantly colored screen!");
    CHECK(a.tokens == b.tokens);
    CHECK(a.tokens.size() == tokenize(preprocess("It is lightweight, has a beautiful and vibrantly colored screen!")).size());
}

TEST_CASE("penn tags reduce to five classes") {
    CHECK(tag_from_penn("NNS") == Tag::Noun);
    CHECK(tag_from_penn("JJR") == Tag::Adj);
    CHECK(tag_from_penn("VBD") == Tag::Verb);
    CHECK(tag_from_penn("MD") == Tag::Verb);
    CHECK(tag_from_penn("RBS") == Tag::Adv);
    CHECK(tag_from_penn("DT") == Tag::Other);
    CHECK(tag_from_string("ADJ") == Tag::Adj);
    CHECK_THROWS_AS(tag_from_string("XX"), ParseError);
}

TEST_CASE("lemmatizer") {
    CHECK(lemmatize("batteries", Tag::Noun) == "battery");
    CHECK(lemmatize("keys", Tag::Noun) == "key");
    CHECK(lemmatize("boxes", Tag::Noun) == "box");
    CHECK(lemmatize("glass", Tag::Noun) == "glass");
    CHECK(lemmatize("graphics", Tag::Noun) == "graphics");
    CHECK(lemmatize("sizes", Tag::Noun) == "size");
    CHECK(lemmatize("caches", Tag::Noun) == "cache");
    CHECK(lemmatize("inches", Tag::Noun) == "inch");
    CHECK(lemmatize("died", Tag::Verb) == "die");
    CHECK(lemmatize("charging", Tag::Verb) == "charge");
    CHECK(lemmatize("stopped", Tag::Verb) == "stop");
    CHECK(lemmatize("Fast", Tag::Adj) == "fast");
    CHECK(lemmatize_phrase("Hard Drive Interfaces") == "hard drive interface");
    CHECK(lemmatize_phrase("Screen Size (inches)") == "screen size inch");
    CHECK(lemmatize_phrase("16 GB") == "gb");
}

TEST_CASE("lexicon lookup") {
    // Oracle: the raw file line for "nice".
    std::ifstream in(default_data_dir() / kSentimentLexiconFile);
    std::string line;
    double pos = -1, neg = -1;
    while (std::getline(in, line))
        if (line.rfind("nice\t", 0) == 0) {
            std::istringstream ss(line.substr(5));
            ss >> pos >> neg;
        }
    REQUIRE(pos >= 0);
    auto s = lexicon_score(bundled_kit().lexicon, "nice");
    CHECK(s.pos == doctest::Approx(pos).epsilon(1e-12));
    CHECK(s.neg == doctest::Approx(neg).epsilon(1e-12));
    CHECK(lexicon_score(bundled_kit().lexicon, "zzzunknown") == Polarity{0.0, 0.0});
}

TEST_CASE("lexicon load validation") {
    CHECK_THROWS_AS(SentimentLexicon::load(write_temp("bad.tsv", "good\t1.2\t0\n")), ValidationError);
    CHECK_THROWS_AS(SentimentLexicon::load(write_temp("nan.tsv", "good\tnan\t0\n")), ValidationError);
    CHECK_THROWS_AS(SentimentLexicon::load(write_temp("short.tsv", "good\t0.5\n")), ParseError);
    CHECK_THROWS_AS(SentimentLexicon::load(write_temp("word.tsv", "good\tx\t0\n")), ParseError);
    auto ok = SentimentLexicon::load(write_temp("ok.tsv", "# c\n\ngood\t0.5\t0.25\n"));
    CHECK(ok.size() == 1);
    CHECK(ok.score("good") == Polarity{0.5, 0.25});
    CHECK_THROWS_AS(SentimentLexicon({{"x", {-0.1, 0}}}), ValidationError);
}

TEST_CASE("embedding table") {
    const auto& e = bundled_kit().embeddings;
    CHECK(e.dim() == 50);
    CHECK(e.size() >= 10000);
    auto oov = embed(EmbeddingTable(2, {{"a", {1, 0}}}), "zzz");
    CHECK(oov.oov);
    CHECK(oov.vector == Vector{0, 0});
    CHECK(embed(e, "Screen").vector == *e.find("screen"));
    CHECK_THROWS_AS(EmbeddingTable(2, {{"a", {1, 0, 0}}}), DimensionMismatch);
    CHECK_THROWS_AS(EmbeddingTable(2, {{"a", {1, NAN}}}), ValidationError);
    CHECK_THROWS_AS(EmbeddingTable(0, {}), ValidationError);
}

TEST_CASE("embedding file formats") {
    std::size_t dim = 0;
    auto v = read_vector_file(write_temp("w2v.txt", "2 3\na 1 0 0\nb 0 1 0\n"), dim);
    CHECK(dim == 3);
    CHECK(v.size() == 2);
    auto t = load_embeddings(write_temp("glove.txt", "a 1 2\nb 3 4\n"));
    CHECK(t.dim() == 2);
    CHECK_THROWS_AS(load_embeddings(write_temp("ragged.txt", "a 1 2\nb 3\n")), DimensionMismatch);
    CHECK_THROWS_AS(load_embeddings("/nonexistent/vectors.txt"), IoError);
}

TEST_CASE("trigram fallback for unknown words") {
    EmbeddingTable t(2, {{"a", {1, 0}}});
    t.set_trigrams({{"<ab", {1, 0}}, {"abc", {0, 1}}});
    auto e = embed(t, "abcd");
    CHECK_FALSE(e.oov);
    CHECK(e.vector[0] == doctest::Approx(0.5));
    CHECK(e.vector[1] == doctest::Approx(0.5));
}

TEST_CASE("phrase embedding averages tokens and splits hyphens") {
    EmbeddingTable t(2, {{"battery", {1, 0}}, {"life", {0, 1}}});
    auto p = embed_phrase(t, "battery life");
    CHECK(p.vector == Vector{0.5, 0.5});
    CHECK(embed_phrase(t, "battery-life").vector == Vector{0.5, 0.5});
    CHECK(embed_phrase(t, "zzz battery").vector == Vector{1, 0});
    CHECK(embed_phrase(t, "zzz").oov);
}

TEST_CASE("cosine") {
    CHECK(cosine(Vector{1, 0}, Vector{0, 1}) == doctest::Approx(0.0));
    Vector v{0.3, -2, 5};
    CHECK(cosine(v, v) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(cosine(Vector{1, 0}, Vector{1, 0, 0}), DimensionMismatch);
    CHECK_THROWS_AS(cosine(Vector{0, 0}, Vector{1, 0}), ZeroVector);
    CHECK(similarity(Vector{0, 0}, Vector{1, 0}) == 0.0);
}

TEST_CASE("bundled cosines match a raw recomputation") {
    const auto& e = bundled_kit().embeddings;
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"screen", "display"}, {"price", "cost"}, {"processor", "cpu"}, {"laptop", "computer"}}) {
        CAPTURE(a);
        CAPTURE(b);
        auto u = raw_vector(a), v = raw_vector(b);
        REQUIRE(u.size() == 50);
        CHECK(cosine(*e.find(a), *e.find(b)) == doctest::Approx(raw_cosine(u, v)).epsilon(1e-12));
    }
}

TEST_CASE("toolkit directory handling") {
    auto dir = seopinion::test::scratch_dir("nolex");
    std::ofstream(dir / kSentimentLexiconFile) << "good\t0.5\t0\n";
    std::ofstream(dir / kEmbeddingsFile) << "good 1 0\n";
    auto kit = load_toolkit(dir);
    CHECK(kit.analyze("the good thing").tokens.at(0).tag == Tag::Other);
    CHECK_THROWS_AS(load_toolkit(dir / "missing"), IoError);
}

}  // TEST_SUITE
