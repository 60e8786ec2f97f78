#include "seopinion/haos/labeled.hpp"

#include <fstream>

#include "seopinion/error.hpp"

namespace seopinion::haos {

std::vector<LabeledOpinion> read_labeled(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open labeled data " + path.string());
    std::vector<LabeledOpinion> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos)
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected label<TAB>aspect<TAB>sentence");
        LabeledOpinion ex;
        ex.label = label_from_string(line.substr(0, t1));
        ex.aspect = line.substr(t1 + 1, t2 - t1 - 1);
        ex.sentence = line.substr(t2 + 1);
        out.push_back(std::move(ex));
    }
    return out;
}

MappedOpinion to_mapped(const LabeledOpinion& ex, const nlp::Toolkit& kit) {
    MappedOpinion m;
    m.category = ex.aspect;
    m.child = ex.aspect;
    m.sentence.text = ex.sentence;
    m.sentence.tagged = kit.analyze(ex.sentence);
    return m;
}

}  // namespace seopinion::haos
