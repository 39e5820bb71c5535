#include "itersel/text.hpp"

#include <cctype>

namespace itersel {

std::vector<std::string> split_whitespace(std::string_view text) {
    std::vector<std::string> out;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
        size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
        if (i > start) {
            out.emplace_back(text.substr(start, i - start));
        }
    }
    return out;
}

std::vector<std::string> normalize_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (const auto & raw : split_whitespace(text)) {
        size_t b = 0;
        size_t e = raw.size();
        while (b < e && std::ispunct(static_cast<unsigned char>(raw[b]))) {
            b++;
        }
        while (e > b && std::ispunct(static_cast<unsigned char>(raw[e - 1]))) {
            e--;
        }
        if (b == e) {
            continue;
        }
        std::string tok = raw.substr(b, e - b);
        for (char & c : tok) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        out.push_back(std::move(tok));
    }
    return out;
}

} // namespace itersel
