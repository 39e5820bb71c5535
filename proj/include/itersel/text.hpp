#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace itersel {

// Split on runs of whitespace. No case folding, no punctuation handling.
// This is the tokenizer of the toy language model and of word counts.
std::vector<std::string> split_whitespace(std::string_view text);

inline size_t word_count(std::string_view text) {
    return split_whitespace(text).size();
}

// Feature tokenization: lowercase, split on whitespace, strip leading and
// trailing ASCII punctuation per token, drop tokens that end up empty.
std::vector<std::string> normalize_tokens(std::string_view text);

} // namespace itersel
