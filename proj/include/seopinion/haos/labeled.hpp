#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "seopinion/haos/polarity.hpp"

namespace seopinion::haos {

/// One gold-labeled (aspect, sentence) pair.
struct LabeledOpinion {
    Label label = Label::Positive;
    std::string aspect;
    std::string sentence;
};

/// Tab-separated `label<TAB>aspect<TAB>sentence` lines, label being
/// "positive" or "negative". '#' lines and blank lines are skipped.
std::vector<LabeledOpinion> read_labeled(const std::filesystem::path& path);

/// Wraps a labeled pair as a MappedOpinion under its own aspect.
MappedOpinion to_mapped(const LabeledOpinion& ex, const nlp::Toolkit& kit);

}  // namespace seopinion::haos
