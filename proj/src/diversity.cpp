#include "itersel/diversity.hpp"

#include "itersel/errors.hpp"
#include "itersel/log.hpp"
#include "itersel/text.hpp"

#include <algorithm>
#include <cmath>

namespace itersel {

std::map<std::string, int> extract_features(const std::string & text, int n_min, int n_max) {
    if (n_min < 1 || n_min > n_max || n_max > 5) {
        throw config_error("n-gram orders must satisfy 1 <= n_min <= n_max <= 5");
    }
    const std::vector<std::string> tokens = normalize_tokens(text);
    std::map<std::string, int> grams;
    for (int n = n_min; n <= n_max; n++) {
        if (tokens.size() < static_cast<size_t>(n)) {
            break;
        }
        for (size_t i = 0; i + n <= tokens.size(); i++) {
            std::string gram = tokens[i];
            for (int j = 1; j < n; j++) {
                gram += ' ';
                gram += tokens[i + j];
            }
            grams[std::move(gram)]++;
        }
    }
    return grams;
}

namespace {

// Shared by posting construction and full recomputes so both round
// identically.
inline double tfidf_term(int count, int64_t total, double idf) {
    return (static_cast<double>(count) / static_cast<double>(total)) * idf;
}

} // namespace

FeatureIndex FeatureIndex::build(std::span<const std::pair<int64_t, std::string>> pool,
                                 int n_min, int n_max,
                                 std::span<const std::string> idf_corpus) {
    if (pool.empty()) {
        throw data_error("build_index: empty pool");
    }

    FeatureIndex index;
    index.ids_.reserve(pool.size());
    index.features_.resize(pool.size());

    for (size_t slot = 0; slot < pool.size(); slot++) {
        const auto & [id, text] = pool[slot];
        index.ids_.push_back(id);
        if (!index.slot_of_.emplace(id, static_cast<uint32_t>(slot)).second) {
            throw std::logic_error("build_index: duplicate sample id");
        }
        auto & feats = index.features_[slot];
        for (const auto & [gram, count] : extract_features(text, n_min, n_max)) {
            auto [it, inserted] = index.gram_ids_.emplace(gram, static_cast<GramId>(index.idf_.size()));
            if (inserted) {
                index.idf_.push_back(0.0);
            }
            feats.grams.emplace_back(it->second, count);
            feats.total_count += count;
        }
    }

    const size_t gram_count = index.idf_.size();
    std::vector<uint32_t> doc_freq(gram_count, 0);
    size_t n_docs = 0;
    if (idf_corpus.empty()) {
        n_docs = pool.size();
        for (const auto & feats : index.features_) {
            for (const auto & [g, count] : feats.grams) {
                doc_freq[g]++;
            }
        }
    } else {
        n_docs = idf_corpus.size();
        for (const auto & text : idf_corpus) {
            for (const auto & [gram, count] : extract_features(text, n_min, n_max)) {
                if (auto it = index.gram_ids_.find(gram); it != index.gram_ids_.end()) {
                    doc_freq[it->second]++;
                }
            }
        }
    }

    size_t unseen = 0;
    for (size_t g = 0; g < gram_count; g++) {
        uint32_t df = doc_freq[g];
        if (df == 0) {
            // Pool gram absent from the IDF corpus; callers should pass a
            // superset of the pool. Fall back to the rarest frequency.
            unseen++;
            df = 1;
        }
        index.idf_[g] = std::log(static_cast<double>(n_docs) / static_cast<double>(df));
    }
    if (unseen > 0) {
        log_warn("build_index: " + std::to_string(unseen) + " gram(s) missing from the IDF corpus");
    }

    index.alpha_.assign(gram_count, 1.0);
    index.postings_.resize(gram_count);
    for (uint32_t slot = 0; slot < index.features_.size(); slot++) {
        const auto & feats = index.features_[slot];
        for (const auto & [g, count] : feats.grams) {
            index.postings_[g].push_back({slot, tfidf_term(count, feats.total_count, index.idf_[g])});
        }
    }

    index.sdiv_.assign(pool.size(), 0.0);
    index.recompute_scores();
    return index;
}

void FeatureIndex::recompute_scores() {
    for (size_t slot = 0; slot < features_.size(); slot++) {
        const auto & feats = features_[slot];
        double s = 0.0;
        for (const auto & [g, count] : feats.grams) {
            s += alpha_[g] * tfidf_term(count, feats.total_count, idf_[g]);
        }
        sdiv_[slot] = s;
    }
}

void FeatureIndex::decay(uint32_t slot, double b) {
    for (const auto & [g, count] : features_[slot].grams) {
        const double old_alpha = alpha_[g];
        const double new_alpha = b * old_alpha;
        const double delta = old_alpha - new_alpha;
        if (delta == 0.0) {
            continue; // already fully decayed
        }
        alpha_[g] = new_alpha;
        for (const Posting & p : postings_[g]) {
            sdiv_[p.slot] -= delta * p.tfidf;
        }
    }
}

std::vector<int64_t> FeatureIndex::apply_decay(int64_t selected_id, double b) {
    auto it = slot_of_.find(selected_id);
    if (it == slot_of_.end()) {
        throw std::logic_error("apply_decay: unknown sample id");
    }
    if (b < 0.0 || b >= 1.0) {
        throw config_error("decay parameter b must be in [0, 1)");
    }
    const uint32_t selected_slot = it->second;

    std::vector<uint32_t> affected;
    for (const auto & [g, count] : features_[selected_slot].grams) {
        const double old_alpha = alpha_[g];
        const double new_alpha = b * old_alpha;
        const double delta = old_alpha - new_alpha;
        if (delta == 0.0) {
            continue;
        }
        alpha_[g] = new_alpha;
        for (const Posting & p : postings_[g]) {
            sdiv_[p.slot] -= delta * p.tfidf;
            if (p.slot != selected_slot) {
                affected.push_back(p.slot);
            }
        }
    }

    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    std::vector<int64_t> out;
    out.reserve(affected.size());
    for (uint32_t slot : affected) {
        out.push_back(ids_[slot]);
    }
    return out;
}

void FeatureIndex::reset_alpha() {
    std::fill(alpha_.begin(), alpha_.end(), 1.0);
    recompute_scores();
}

std::optional<double> FeatureIndex::idf(const std::string & gram) const {
    auto it = gram_ids_.find(gram);
    if (it == gram_ids_.end()) {
        return std::nullopt;
    }
    return idf_[it->second];
}

std::optional<double> FeatureIndex::alpha(const std::string & gram) const {
    auto it = gram_ids_.find(gram);
    if (it == gram_ids_.end()) {
        return std::nullopt;
    }
    return alpha_[it->second];
}

std::map<int64_t, double> diversity_scores(const FeatureIndex & index) {
    std::map<int64_t, double> out;
    for (size_t slot = 0; slot < index.ids().size(); slot++) {
        out.emplace(index.ids()[slot], index.score_at(static_cast<uint32_t>(slot)));
    }
    return out;
}

} // namespace itersel
