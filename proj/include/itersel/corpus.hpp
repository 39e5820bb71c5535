#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace itersel {

// One instruction-response pair. ids are positional: dense in [0, N).
struct Sample {
    int64_t id = 0;
    std::string instruction;
    std::string response;
};

enum class CorpusFormat { plain, alpaca };

CorpusFormat parse_corpus_format(const std::string & name);
const char * corpus_format_name(CorpusFormat format);

struct Corpus {
    std::vector<Sample> samples;
    std::string source_path;
    CorpusFormat format = CorpusFormat::plain;
    size_t skipped_records = 0; // malformed or empty-response lines

    size_t size() const { return samples.size(); }
    const Sample & by_id(int64_t id) const { return samples.at(static_cast<size_t>(id)); }
};

// Reads one JSON object per line.
//   plain:  {"instruction": ..., "response": ...}
//   alpaca: {"instruction": ..., "input": ..., "output": ...}
//           instruction := instruction + "\n" + input when input is non-empty
// Records with an empty (after trimming) response are skipped with a warning.
// Throws data_error when the file is unreadable or no record is accepted.
Corpus load_corpus(const std::string & path, CorpusFormat format);

// Default prompt shell for conditional scoring.
extern const char * const kDefaultPromptTemplate;

// Substitutes the single "{instruction}" placeholder. Throws config_error
// when the template has zero or more than one placeholder.
std::string render_prompt(const std::string & instruction, const std::string & prompt_template);
std::string render_prompt(const Sample & sample, const std::string & prompt_template);

} // namespace itersel
