#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace seopinion::test {

std::filesystem::path fixtures_dir() { return SEOPINION_TEST_FIXTURES; }
std::filesystem::path docs_dir() { return SEOPINION_DOCS_DIR; }

const nlp::Toolkit& bundled_kit() {
    static const nlp::Toolkit kit = nlp::load_toolkit(SEOPINION_DEFAULT_DATA_DIR);
    return kit;
}

const nlp::Toolkit& planted_kit() {
    static const nlp::Toolkit kit = nlp::load_toolkit(fixtures_dir() / "planted" / "data");
    return kit;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::ordered_json read_json(const std::filesystem::path& path) {
    return nlohmann::ordered_json::parse(read_file(path));
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("seopinion-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace seopinion::test
