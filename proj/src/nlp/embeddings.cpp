#include "seopinion/nlp/embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "seopinion/error.hpp"
#include "seopinion/nlp/text.hpp"

namespace seopinion::nlp {

namespace {

void check_vector(const std::string& word, const Vector& v, std::size_t dim) {
    if (v.size() != dim)
        throw DimensionMismatch("vector for '" + word + "' has " + std::to_string(v.size()) + " components, expected " +
                                std::to_string(dim));
    for (double x : v)
        if (!std::isfinite(x)) throw ValidationError("vector for '" + word + "' has a non-finite component");
}

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

EmbeddingTable::EmbeddingTable(std::size_t dim, std::unordered_map<std::string, Vector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw ValidationError("embedding dimension must be positive");
    for (const auto& [w, v] : vectors_) check_vector(w, v, dim_);
}

const Vector* EmbeddingTable::find(std::string_view word) const {
    auto it = vectors_.find(std::string(word));
    return it == vectors_.end() ? nullptr : &it->second;
}

void EmbeddingTable::set_trigrams(std::unordered_map<std::string, Vector> trigrams) {
    for (const auto& [g, v] : trigrams) check_vector(g, v, dim_);
    trigrams_ = std::move(trigrams);
}

const Vector* EmbeddingTable::find_trigram(std::string_view gram) const {
    auto it = trigrams_.find(std::string(gram));
    return it == trigrams_.end() ? nullptr : &it->second;
}

std::unordered_map<std::string, Vector> read_vector_file(const std::filesystem::path& path, std::size_t& dim) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open embeddings " + path.string());
    std::unordered_map<std::string, Vector> vectors;
    std::string line;
    std::size_t lineno = 0;
    dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto f = fields(line);
        if (f.empty()) continue;
        if (lineno == 1 && f.size() == 2) {
            // word2vec header "<count> <dim>"
            std::size_t a = 0, b = 0;
            auto r1 = std::from_chars(f[0].data(), f[0].data() + f[0].size(), a);
            auto r2 = std::from_chars(f[1].data(), f[1].data() + f[1].size(), b);
            if (r1.ec == std::errc{} && r2.ec == std::errc{} && r1.ptr == f[0].data() + f[0].size() &&
                r2.ptr == f[1].data() + f[1].size())
                continue;
        }
        if (f.size() < 2) throw ParseError(path.string() + ":" + std::to_string(lineno) + ": word without components");
        Vector v;
        v.reserve(f.size() - 1);
        for (std::size_t k = 1; k < f.size(); ++k) {
            double x = 0;
            auto [ptr, ec] = std::from_chars(f[k].data(), f[k].data() + f[k].size(), x);
            if (ec != std::errc{} || ptr != f[k].data() + f[k].size())
                throw ParseError(path.string() + ":" + std::to_string(lineno) + ": bad component '" +
                                 std::string(f[k]) + "'");
            v.push_back(x);
        }
        std::string word(f[0]);
        if (dim == 0) dim = v.size();
        check_vector(word, v, dim);
        vectors.insert_or_assign(std::move(word), std::move(v));
    }
    return vectors;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
    std::size_t dim = 0;
    auto vectors = read_vector_file(path, dim);
    if (vectors.empty()) throw ValidationError("embedding file " + path.string() + " has no vectors");
    return EmbeddingTable(dim, std::move(vectors));
}

Embedding embed(const EmbeddingTable& table, std::string_view word) {
    auto w = to_lower(word);
    if (const auto* v = table.find(w)) return {*v, false};
    Embedding out{Vector(table.dim(), 0.0), true};
    if (!table.has_trigrams()) return out;
    std::string padded = "<" + w + ">";
    std::size_t hits = 0;
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
        if (const auto* g = table.find_trigram(std::string_view(padded).substr(i, 3))) {
            for (std::size_t k = 0; k < g->size(); ++k) out.vector[k] += (*g)[k];
            ++hits;
        }
    }
    if (hits == 0) return out;
    for (auto& x : out.vector) x /= static_cast<double>(hits);
    out.oov = false;
    return out;
}

Embedding embed_phrase(const EmbeddingTable& table, std::string_view phrase) {
    std::vector<std::string> words;
    for (auto& tok : tokenize(phrase)) {
        if (!is_word_token(tok)) continue;
        if (tok.find('-') != std::string::npos && !table.find(to_lower(tok))) {
            std::size_t start = 0;
            while (start <= tok.size()) {
                auto dash = tok.find('-', start);
                if (dash == std::string::npos) dash = tok.size();
                if (dash > start) words.push_back(tok.substr(start, dash - start));
                start = dash + 1;
            }
        } else {
            words.push_back(std::move(tok));
        }
    }
    Embedding out{Vector(table.dim(), 0.0), true};
    std::size_t n = 0;
    for (const auto& w : words) {
        auto e = embed(table, w);
        if (e.oov) continue;
        for (std::size_t k = 0; k < e.vector.size(); ++k) out.vector[k] += e.vector[k];
        ++n;
    }
    if (n == 0) return out;
    for (auto& x : out.vector) x /= static_cast<double>(n);
    out.oov = false;
    return out;
}

double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size())
        throw DimensionMismatch("cosine of vectors with lengths " + std::to_string(u.size()) + " and " +
                                std::to_string(v.size()));
    double dot = 0, nu = 0, nv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) throw ZeroVector("cosine with a zero vector is undefined");
    double c = dot / (std::sqrt(nu) * std::sqrt(nv));
    return std::clamp(c, -1.0, 1.0);
}

double similarity(std::span<const double> u, std::span<const double> v) {
    try {
        return cosine(u, v);
    } catch (const ZeroVector&) {
        return 0.0;
    }
}

}  // namespace seopinion::nlp
