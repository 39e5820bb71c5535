#pragma once

#include "itersel/corpus.hpp"
#include "itersel/provider.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace itersel {

// Word-level interpolated n-gram model, orders 1-3, add-k smoothing.
// Trainable by count addition, so a "fine-tuning pass" is just adding the
// selected samples' n-gram counts. Deterministic; probabilities over the
// closed vocabulary sum to 1 at every step.
class ToyNgramProvider : public Provider {
  public:
    static constexpr double kAddK = 0.1;
    static constexpr double kOrderWeights[3] = {0.2, 0.3, 0.5}; // orders 1, 2, 3

    // Closed vocabulary; an unknown-word symbol is always present.
    explicit ToyNgramProvider(const std::vector<std::string> & vocabulary);

    // Vocabulary from the rendered prompt + response of every sample.
    // The returned provider is untrained (uniform add-k limit).
    static ToyNgramProvider from_corpus(const Corpus & corpus, const std::string & prompt_template);

    // Adds n-gram counts of render_prompt(sample) + response, pass_weight
    // times per sample, and bumps the version. Throws config_error on an
    // empty subset. Not safe to call concurrently with logprobs().
    void train(std::span<const Sample> subset, int pass_weight, const std::string & prompt_template);
    void train_texts(std::span<const std::string> texts, int pass_weight);

    std::string version() const override { return "toy-v" + std::to_string(train_steps_); }

    size_t vocab_size() const { return vocab_.size(); }
    const std::vector<std::string> & vocabulary() const { return vocab_; }

    // p(word | history) under the interpolated model; history uses at most
    // the last two tokens. Exposed so tests can sum the distribution.
    double token_prob(const std::vector<std::string> & history, const std::string & word) const;

  protected:
    TokenLogProbs logprobs_impl(const std::string & context, const std::string & continuation) override;

  private:
    using WordId = uint32_t;

    WordId id_of(const std::string & word) const;
    double order_prob(int order, uint64_t ctx_key, WordId word) const;
    void add_counts(const std::vector<WordId> & tokens, double weight);

    std::vector<std::string> vocab_; // index = WordId; [0] is the unknown symbol
    std::unordered_map<std::string, WordId> word_ids_;

    struct CountTable {
        std::unordered_map<uint64_t, double> gram;    // (history, word) -> count
        std::unordered_map<uint64_t, double> context; // history -> total count
    };
    CountTable tables_[3]; // orders 1..3
    uint64_t train_steps_ = 0;
};

} // namespace itersel
