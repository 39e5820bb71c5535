#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

namespace itersel {

// Per-token natural-log probabilities of a continuation.
struct TokenLogProbs {
    std::vector<double> values; // each finite and <= 0

    size_t token_count() const { return values.size(); }
};

// Source of per-token log-probabilities under two contexts: the prior call
// passes an empty context, the conditional call passes the rendered prompt.
// Implementations must be deterministic for a fixed version() and safe to
// call concurrently.
class Provider {
  public:
    virtual ~Provider() = default;

    // Throws scoring_error when the continuation yields zero tokens or the
    // backend cannot produce aligned log-probabilities.
    TokenLogProbs logprobs(const std::string & context, const std::string & continuation) {
        calls_.fetch_add(1, std::memory_order_relaxed);
        return logprobs_impl(context, continuation);
    }

    // Opaque tag for the current model state. Changes whenever scoring
    // behavior changes.
    virtual std::string version() const = 0;

    // Number of logprobs() invocations, the accounting basis for the
    // scoring cost bound.
    uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }
    void reset_call_count() { calls_.store(0, std::memory_order_relaxed); }

  protected:
    virtual TokenLogProbs logprobs_impl(const std::string & context, const std::string & continuation) = 0;

  private:
    std::atomic<uint64_t> calls_{0};
};

} // namespace itersel
