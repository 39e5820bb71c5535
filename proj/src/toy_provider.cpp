#include "itersel/toy_provider.hpp"

#include "itersel/errors.hpp"
#include "itersel/text.hpp"

#include <cmath>

namespace itersel {

namespace {

constexpr int kSlotBits = 21;
constexpr size_t kMaxVocab = (1u << kSlotBits) - 2; // slot 0 means "absent"

const char * const kUnknownWord = "<unk>";

} // namespace

ToyNgramProvider::ToyNgramProvider(const std::vector<std::string> & vocabulary) {
    vocab_.push_back(kUnknownWord);
    word_ids_.emplace(kUnknownWord, 0);
    for (const auto & word : vocabulary) {
        if (word_ids_.emplace(word, static_cast<WordId>(vocab_.size())).second) {
            vocab_.push_back(word);
        }
    }
    if (vocab_.size() > kMaxVocab) {
        throw config_error("toy provider vocabulary too large");
    }
}

ToyNgramProvider ToyNgramProvider::from_corpus(const Corpus & corpus, const std::string & prompt_template) {
    std::vector<std::string> words;
    for (const auto & sample : corpus.samples) {
        for (auto & w : split_whitespace(render_prompt(sample, prompt_template))) {
            words.push_back(std::move(w));
        }
        for (auto & w : split_whitespace(sample.response)) {
            words.push_back(std::move(w));
        }
    }
    return ToyNgramProvider(words);
}

ToyNgramProvider::WordId ToyNgramProvider::id_of(const std::string & word) const {
    auto it = word_ids_.find(word);
    return it == word_ids_.end() ? 0 : it->second;
}

void ToyNgramProvider::add_counts(const std::vector<WordId> & tokens, double weight) {
    for (size_t t = 0; t < tokens.size(); t++) {
        const uint64_t w = tokens[t] + 1;
        // History slots, truncated at the sequence start.
        const uint64_t h1 = t >= 1 ? tokens[t - 1] + 1 : 0;
        const uint64_t h2 = t >= 2 ? tokens[t - 2] + 1 : 0;
        const uint64_t ctx[3] = {0, h1, (h2 << kSlotBits) | h1};
        for (int o = 0; o < 3; o++) {
            tables_[o].gram[(ctx[o] << kSlotBits) | w] += weight;
            tables_[o].context[ctx[o]] += weight;
        }
    }
}

void ToyNgramProvider::train(std::span<const Sample> subset, int pass_weight, const std::string & prompt_template) {
    if (subset.empty()) {
        throw config_error("toy_train: empty subset");
    }
    if (pass_weight < 1) {
        throw config_error("toy_train: pass_weight must be positive");
    }
    for (const auto & sample : subset) {
        std::vector<WordId> tokens;
        for (const auto & w : split_whitespace(render_prompt(sample, prompt_template))) {
            tokens.push_back(id_of(w));
        }
        for (const auto & w : split_whitespace(sample.response)) {
            tokens.push_back(id_of(w));
        }
        add_counts(tokens, pass_weight);
    }
    train_steps_++;
}

void ToyNgramProvider::train_texts(std::span<const std::string> texts, int pass_weight) {
    if (texts.empty()) {
        throw config_error("toy_train: empty subset");
    }
    if (pass_weight < 1) {
        throw config_error("toy_train: pass_weight must be positive");
    }
    for (const auto & text : texts) {
        std::vector<WordId> tokens;
        for (const auto & w : split_whitespace(text)) {
            tokens.push_back(id_of(w));
        }
        add_counts(tokens, pass_weight);
    }
    train_steps_++;
}

double ToyNgramProvider::order_prob(int order, uint64_t ctx_key, WordId word) const {
    const CountTable & table = tables_[order - 1];
    double c_gram = 0.0;
    if (auto it = table.gram.find((ctx_key << kSlotBits) | (word + 1)); it != table.gram.end()) {
        c_gram = it->second;
    }
    double c_ctx = 0.0;
    if (auto it = table.context.find(ctx_key); it != table.context.end()) {
        c_ctx = it->second;
    }
    const double v = static_cast<double>(vocab_.size());
    return (c_gram + kAddK) / (c_ctx + kAddK * v);
}

double ToyNgramProvider::token_prob(const std::vector<std::string> & history, const std::string & word) const {
    const size_t n = history.size();
    const uint64_t h1 = n >= 1 ? id_of(history[n - 1]) + 1 : 0;
    const uint64_t h2 = n >= 2 ? id_of(history[n - 2]) + 1 : 0;
    const WordId w = id_of(word);
    return kOrderWeights[0] * order_prob(1, 0, w) +
           kOrderWeights[1] * order_prob(2, h1, w) +
           kOrderWeights[2] * order_prob(3, (h2 << kSlotBits) | h1, w);
}

TokenLogProbs ToyNgramProvider::logprobs_impl(const std::string & context, const std::string & continuation) {
    std::vector<WordId> stream;
    for (const auto & w : split_whitespace(context)) {
        stream.push_back(id_of(w));
    }
    const size_t ctx_len = stream.size();
    for (const auto & w : split_whitespace(continuation)) {
        stream.push_back(id_of(w));
    }
    if (stream.size() == ctx_len) {
        throw scoring_error("continuation tokenizes to zero tokens");
    }

    TokenLogProbs out;
    out.values.reserve(stream.size() - ctx_len);
    for (size_t t = ctx_len; t < stream.size(); t++) {
        const uint64_t h1 = t >= 1 ? stream[t - 1] + 1 : 0;
        const uint64_t h2 = t >= 2 ? stream[t - 2] + 1 : 0;
        const WordId w = stream[t];
        const double p = kOrderWeights[0] * order_prob(1, 0, w) +
                         kOrderWeights[1] * order_prob(2, h1, w) +
                         kOrderWeights[2] * order_prob(3, (h2 << kSlotBits) | h1, w);
        out.values.push_back(std::log(p));
    }
    return out;
}

} // namespace itersel
