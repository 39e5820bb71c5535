#include "itersel/corpus.hpp"

#include "itersel/errors.hpp"
#include "itersel/log.hpp"

#include <json.hpp>

#include <fstream>

namespace itersel {

const char * const kDefaultPromptTemplate =
    "Below is an instruction. Write a response.\n\n"
    "### Instruction:\n{instruction}\n\n### Response:\n";

CorpusFormat parse_corpus_format(const std::string & name) {
    if (name == "plain") return CorpusFormat::plain;
    if (name == "alpaca") return CorpusFormat::alpaca;
    throw config_error("unknown corpus format: " + name);
}

const char * corpus_format_name(CorpusFormat format) {
    return format == CorpusFormat::plain ? "plain" : "alpaca";
}

namespace {

bool is_blank(const std::string & s) {
    return s.find_first_not_of(" \t\r\n\f\v") == std::string::npos;
}

// Returns false when the record is malformed or fails validation.
bool parse_record(const nlohmann::json & rec, CorpusFormat format, Sample & out) {
    if (!rec.is_object()) {
        return false;
    }
    if (format == CorpusFormat::plain) {
        if (!rec.contains("instruction") || !rec.contains("response") ||
            !rec["instruction"].is_string() || !rec["response"].is_string()) {
            return false;
        }
        out.instruction = rec["instruction"].get<std::string>();
        out.response = rec["response"].get<std::string>();
    } else {
        if (!rec.contains("instruction") || !rec.contains("output") ||
            !rec["instruction"].is_string() || !rec["output"].is_string()) {
            return false;
        }
        out.instruction = rec["instruction"].get<std::string>();
        if (rec.contains("input") && rec["input"].is_string()) {
            const std::string input = rec["input"].get<std::string>();
            if (!input.empty()) {
                out.instruction += "\n" + input;
            }
        }
        out.response = rec["output"].get<std::string>();
    }
    return !is_blank(out.response);
}

} // namespace

Corpus load_corpus(const std::string & path, CorpusFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw data_error("cannot open dataset: " + path);
    }

    Corpus corpus;
    corpus.source_path = path;
    corpus.format = format;

    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (is_blank(line)) {
            continue;
        }
        Sample sample;
        bool ok = false;
        try {
            ok = parse_record(nlohmann::json::parse(line), format, sample);
        } catch (const nlohmann::json::exception &) {
            ok = false;
        }
        if (!ok) {
            corpus.skipped_records++;
            log_warn(path + ":" + std::to_string(line_no) + ": skipped invalid record");
            continue;
        }
        sample.id = static_cast<int64_t>(corpus.samples.size());
        corpus.samples.push_back(std::move(sample));
    }

    if (corpus.samples.empty()) {
        throw data_error("no accepted records in " + path);
    }
    if (corpus.skipped_records > 0) {
        log_warn(path + ": skipped " + std::to_string(corpus.skipped_records) + " invalid record(s)");
    }
    return corpus;
}

std::string render_prompt(const std::string & instruction, const std::string & prompt_template) {
    static const std::string placeholder = "{instruction}";
    const size_t pos = prompt_template.find(placeholder);
    if (pos == std::string::npos) {
        throw config_error("prompt template is missing the {instruction} placeholder");
    }
    if (prompt_template.find(placeholder, pos + 1) != std::string::npos) {
        throw config_error("prompt template has more than one {instruction} placeholder");
    }
    std::string out = prompt_template;
    out.replace(pos, placeholder.size(), instruction);
    return out;
}

std::string render_prompt(const Sample & sample, const std::string & prompt_template) {
    return render_prompt(sample.instruction, prompt_template);
}

} // namespace itersel
