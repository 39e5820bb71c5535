#pragma once

#include "itersel/corpus.hpp"
#include "itersel/provider.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace itersel {

struct ComplexityScore {
    double ppl_prior = 0.0;
    double ppl_cond = 0.0;
    double s_com = 0.0;
    double mean_nll_prior = 0.0;
    double mean_nll_cond = 0.0;
    std::string version;
};

// Mean negative log-likelihood, accumulated in double before exponentiation.
double mean_nll(const TokenLogProbs & lp);

// exp of the negative mean of lp.values.
double perplexity(const TokenLogProbs & lp);

// cond / prior. Inputs must be positive.
double ifd(double ppl_prior, double ppl_cond);

ComplexityScore complexity_from_logprobs(const TokenLogProbs & prior, const TokenLogProbs & cond,
                                         std::string version);

// s_com < 1, strict: conditioning on the instruction reduced entropy.
inline bool is_aligned(const ComplexityScore & score) { return score.s_com < 1.0; }

struct ScoreTable {
    std::map<int64_t, ComplexityScore> scores; // ordered by id for stable dumps
    std::string version;
    size_t unscoreable = 0;

    bool contains(int64_t id) const { return scores.count(id) != 0; }
    const ComplexityScore & at(int64_t id) const { return scores.at(id); }
};

// Two provider calls per sample: logprobs("", response) and
// logprobs(render_prompt(sample), response). Unscoreable samples are
// omitted and counted; more than 50% unscoreable is fatal (data_error).
// threads = 0 picks a bounded default.
ScoreTable score_pool(std::span<const Sample> pool, Provider & provider,
                      const std::string & prompt_template, int threads = 0);

} // namespace itersel
