#include "docsim/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace docsim {

std::string to_string(NormMode mode) {
    switch (mode) {
        case NormMode::None: return "none";
        case NormMode::L1: return "l1";
        case NormMode::L2: return "l2";
    }
    return "none";
}

NormMode norm_mode_from_string(const std::string& s) {
    if (s == "none") return NormMode::None;
    if (s == "l1") return NormMode::L1;
    if (s == "l2") return NormMode::L2;
    throw std::runtime_error("unknown norm mode: " + s);
}

Vocabulary build_vocabulary(const std::vector<TokenList>& train, double min_df_frac,
                            double max_df_frac) {
    if (train.empty()) throw std::runtime_error("build_vocabulary: no training documents");
    if (!(0.0 <= min_df_frac && min_df_frac < max_df_frac && max_df_frac <= 1.0))
        throw std::runtime_error("build_vocabulary: invalid df bounds");

    // std::map gives the lexicographic term order directly.
    std::map<std::string, int> df;
    for (const auto& doc : train) {
        std::map<std::string, int> seen;
        for (const auto& tok : doc) seen.emplace(tok, 1);
        for (const auto& [term, _] : seen) ++df[term];
    }

    const auto n = static_cast<double>(train.size());
    Vocabulary vocab;
    vocab.n_docs = static_cast<int>(train.size());
    for (const auto& [term, count] : df) {
        const double frac = count / n;
        if (frac < min_df_frac || frac > max_df_frac) continue;
        vocab.index.emplace(term, static_cast<int>(vocab.terms.size()));
        vocab.terms.push_back(term);
        vocab.df.push_back(count);
    }
    if (vocab.terms.empty())
        throw std::runtime_error("build_vocabulary: every term was filtered out");
    return vocab;
}

std::vector<double> compute_idf(const Vocabulary& vocab) {
    if (vocab.terms.empty()) throw std::runtime_error("compute_idf: empty vocabulary");
    std::vector<double> idf(vocab.terms.size());
    for (std::size_t t = 0; t < idf.size(); ++t)
        idf[t] = std::log((1.0 + vocab.n_docs) / (1.0 + vocab.df[t])) + 1.0;
    return idf;
}

FeatureVector vectorize_full(const TokenList& doc, const Vocabulary& vocab,
                             const std::vector<double>& idf) {
    std::map<int, int> counts;
    for (const auto& tok : doc) {
        auto it = vocab.index.find(tok);
        if (it != vocab.index.end()) ++counts[it->second];
    }
    FeatureVector v;
    v.dim = vocab.size();
    v.entries.reserve(counts.size());
    for (const auto& [idx, count] : counts)
        v.entries.emplace_back(idx, count * idf[static_cast<std::size_t>(idx)]);
    return v;
}

std::vector<int> rank_features(const std::vector<FeatureVector>& train_vectors,
                               const Vocabulary& vocab) {
    std::vector<double> totals(static_cast<std::size_t>(vocab.size()), 0.0);
    for (const auto& v : train_vectors)
        for (const auto& [idx, w] : v.entries) totals[static_cast<std::size_t>(idx)] += w;

    std::vector<int> order(totals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (totals[static_cast<std::size_t>(a)] != totals[static_cast<std::size_t>(b)])
            return totals[static_cast<std::size_t>(a)] > totals[static_cast<std::size_t>(b)];
        return a < b;  // vocab indices are in lexicographic term order
    });
    return order;
}

FeatureSpace make_space(const Vocabulary& vocab, const std::vector<double>& idf,
                        const std::vector<int>& ranking, int M) {
    if (M < 1) throw std::runtime_error("feature selection: M must be >= 1");
    const int keep = std::min<int>(M, vocab.size());
    FeatureSpace space;
    space.vocab = vocab;
    space.idf = idf;
    space.selected.assign(ranking.begin(), ranking.begin() + keep);
    std::sort(space.selected.begin(), space.selected.end());
    space.selected_pos.assign(static_cast<std::size_t>(vocab.size()), -1);
    for (int i = 0; i < keep; ++i)
        space.selected_pos[static_cast<std::size_t>(space.selected[static_cast<std::size_t>(i)])] = i;
    return space;
}

FeatureSpace select_top_features(const std::vector<FeatureVector>& train_vectors,
                                 const Vocabulary& vocab, const std::vector<double>& idf,
                                 int M) {
    return make_space(vocab, idf, rank_features(train_vectors, vocab), M);
}

FeatureVector project(const FeatureVector& full, const FeatureSpace& space,
                      NormMode mode) {
    FeatureVector v;
    v.dim = space.dim();
    for (const auto& [idx, w] : full.entries) {
        const int pos = space.selected_pos[static_cast<std::size_t>(idx)];
        if (pos >= 0) v.entries.emplace_back(pos, w);
    }
    return normalize(std::move(v), mode);
}

FeatureVector vectorize(const TokenList& doc, const FeatureSpace& space, NormMode mode) {
    return project(vectorize_full(doc, space.vocab, space.idf), space, mode);
}

FeatureVector normalize(FeatureVector v, NormMode mode) {
    v.norm_mode = mode;
    if (mode == NormMode::None || v.entries.empty()) return v;
    double scale = 0.0;
    if (mode == NormMode::L1) {
        for (const auto& [_, w] : v.entries) scale += std::abs(w);
    } else {
        for (const auto& [_, w] : v.entries) scale += w * w;
        scale = std::sqrt(scale);
    }
    for (auto& [_, w] : v.entries) w /= scale;
    return v;
}

std::vector<int> default_dims_grid() {
    return {10, 25, 50, 75, 100, 150, 200, 250, 300, 400, 500, 600, 700, 800};
}

}  // namespace docsim
