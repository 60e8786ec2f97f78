#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seopinion::nlp {

/// Review-text cleanup, applied in this order:
///   1. strip URLs
///   2. strip non-ASCII bytes
///   3. expand emoticons (":)" -> "good"), slang ("gr8" -> "great") and acronyms
///   4. rewrite contractions ("isn't" -> "is not", "it's" -> "it is")
///   5. drop standalone numbers
///   6. lowercase
/// The result is re-joined with single spaces between word and punctuation
/// tokens, which makes the function idempotent. Stop words are kept: the
/// tagger needs them.
std::string preprocess(std::string_view text);

/// Splits on runs of . ! ? followed by whitespace or end of text; common
/// abbreviations ("e.g.", "Mr.", "approx.") do not end a sentence.
std::vector<std::string> split_sentences(std::string_view text);

/// Word tokens ([A-Za-z0-9] runs joined by internal ' or -) and runs of
/// punctuation, in order.
std::vector<std::string> tokenize(std::string_view sentence);

bool is_word_token(std::string_view token);

std::string to_lower(std::string_view s);

/// Fixed English stop-word list; see kStopWordsVersion.
bool is_stop_word(std::string_view lowercase_word);
inline constexpr int kStopWordsVersion = 1;

}  // namespace seopinion::nlp
