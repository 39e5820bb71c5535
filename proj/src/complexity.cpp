#include "itersel/complexity.hpp"

#include "itersel/errors.hpp"
#include "itersel/log.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <thread>
#include <vector>

namespace itersel {

double mean_nll(const TokenLogProbs & lp) {
    if (lp.values.empty()) {
        throw scoring_error("empty log-prob vector");
    }
    double sum = 0.0;
    for (double v : lp.values) {
        sum += v;
    }
    return -sum / static_cast<double>(lp.values.size());
}

double perplexity(const TokenLogProbs & lp) {
    return std::exp(mean_nll(lp));
}

double ifd(double ppl_prior, double ppl_cond) {
    if (!(ppl_prior > 0.0) || !(ppl_cond > 0.0)) {
        throw std::logic_error("ifd: perplexities must be positive");
    }
    return ppl_cond / ppl_prior;
}

ComplexityScore complexity_from_logprobs(const TokenLogProbs & prior, const TokenLogProbs & cond,
                                         std::string version) {
    ComplexityScore score;
    score.mean_nll_prior = mean_nll(prior);
    score.mean_nll_cond = mean_nll(cond);
    score.ppl_prior = std::exp(score.mean_nll_prior);
    score.ppl_cond = std::exp(score.mean_nll_cond);
    // Long responses can overflow the individual perplexities; the ratio
    // stays representable via the NLL difference.
    if (score.ppl_prior > 1e300 || score.ppl_cond > 1e300) {
        score.s_com = std::exp(score.mean_nll_cond - score.mean_nll_prior);
    } else {
        score.s_com = ifd(score.ppl_prior, score.ppl_cond);
    }
    score.version = std::move(version);
    return score;
}

ScoreTable score_pool(std::span<const Sample> pool, Provider & provider,
                      const std::string & prompt_template, int threads) {
    if (pool.empty()) {
        throw data_error("score_pool: empty pool");
    }
    if (threads <= 0) {
        threads = static_cast<int>(std::min<unsigned>(std::thread::hardware_concurrency(), 8));
        if (threads <= 0) {
            threads = 1;
        }
    }
    threads = static_cast<int>(std::min<size_t>(threads, pool.size()));

    const std::string version = provider.version();
    std::vector<std::optional<ComplexityScore>> results(pool.size());
    std::atomic<size_t> next{0};
    std::atomic<size_t> failed{0};

    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= pool.size()) {
                return;
            }
            const Sample & sample = pool[i];
            try {
                const TokenLogProbs prior = provider.logprobs("", sample.response);
                const TokenLogProbs cond =
                    provider.logprobs(render_prompt(sample, prompt_template), sample.response);
                results[i] = complexity_from_logprobs(prior, cond, version);
            } catch (const scoring_error & e) {
                failed.fetch_add(1);
                log_warn("sample " + std::to_string(sample.id) + " unscoreable: " + e.what());
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool_threads;
        pool_threads.reserve(threads);
        for (int t = 0; t < threads; t++) {
            pool_threads.emplace_back(worker);
        }
        for (auto & t : pool_threads) {
            t.join();
        }
    }

    ScoreTable table;
    table.version = version;
    table.unscoreable = failed.load();
    if (table.unscoreable * 2 > pool.size()) {
        throw data_error("score_pool: " + std::to_string(table.unscoreable) + " of " +
                         std::to_string(pool.size()) +
                         " samples unscoreable; provider looks misconfigured");
    }
    for (size_t i = 0; i < pool.size(); i++) {
        if (results[i]) {
            table.scores.emplace(pool[i].id, std::move(*results[i]));
        }
    }
    return table;
}

} // namespace itersel
