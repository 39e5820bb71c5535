#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace itersel {

// All n-grams of orders [n_min, n_max] over normalized tokens, joined by a
// single space, with multiplicities. Empty when no token survives
// normalization.
std::map<std::string, int> extract_features(const std::string & text, int n_min, int n_max);

// Inverted n-gram index over a candidate pool: per gram the IDF and a
// decaying weight alpha, plus postings back into the pool. Diversity scores
// are kept current incrementally, so a greedy selection step costs the
// posting lengths of the picked sample's grams instead of a full pool
// recompute.
class FeatureIndex {
  public:
    // idf_corpus, when given, supplies the document-frequency statistics
    // (N' = |idf_corpus|) instead of the pool itself.
    static FeatureIndex build(std::span<const std::pair<int64_t, std::string>> pool,
                              int n_min, int n_max,
                              std::span<const std::string> idf_corpus = {});

    size_t pool_size() const { return ids_.size(); }  // N'
    size_t gram_count() const { return idf_.size(); }
    const std::vector<int64_t> & ids() const { return ids_; }
    bool contains(int64_t id) const { return slot_of_.count(id) != 0; }

    double score(int64_t id) const { return sdiv_[slot_of_.at(id)]; }
    double score_at(uint32_t slot) const { return sdiv_[slot]; }
    uint32_t slot(int64_t id) const { return slot_of_.at(id); }

    // alpha(g) <- b * alpha(g) for every distinct gram of the selected
    // sample; updates affected scores in place and returns the ids whose
    // score changed (postings union minus the selected id).
    std::vector<int64_t> apply_decay(int64_t selected_id, double b);

    // Same decay without materializing the affected-id set (greedy loop).
    void decay(uint32_t slot, double b);

    // Restore all alpha to 1 and recompute scores; equals a fresh build
    // over the same pool bit for bit.
    void reset_alpha();

    // Test hooks.
    std::optional<double> idf(const std::string & gram) const;
    std::optional<double> alpha(const std::string & gram) const;

  private:
    using GramId = uint32_t;

    struct Posting {
        uint32_t slot;
        double tfidf; // (f_g / total_count) * idf, the alpha = 1 contribution
    };
    struct SampleFeatures {
        std::vector<std::pair<GramId, int>> grams; // distinct, with counts
        int64_t total_count = 0;                   // all extracted grams, multiplicities included
    };

    void recompute_scores();

    std::unordered_map<std::string, GramId> gram_ids_;
    std::vector<double> idf_;
    std::vector<double> alpha_;
    std::vector<std::vector<Posting>> postings_;
    std::vector<SampleFeatures> features_;
    std::vector<double> sdiv_;
    std::vector<int64_t> ids_;
    std::unordered_map<int64_t, uint32_t> slot_of_;
};

// Eq-style snapshot of the current scores, keyed by sample id.
std::map<int64_t, double> diversity_scores(const FeatureIndex & index);

} // namespace itersel
