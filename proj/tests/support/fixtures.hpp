#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "seopinion/nlp/toolkit.hpp"

namespace seopinion::test {

std::filesystem::path fixtures_dir();
std::filesystem::path docs_dir();

// Loaded once per process; both are read-only.
const nlp::Toolkit& bundled_kit();
const nlp::Toolkit& planted_kit();

std::string read_file(const std::filesystem::path& path);
nlohmann::ordered_json read_json(const std::filesystem::path& path);

// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

}  // namespace seopinion::test
