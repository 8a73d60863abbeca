#ifndef DOCSIM_FEATURES_HPP
#define DOCSIM_FEATURES_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "docsim/preprocess.hpp"

namespace docsim {

enum class NormMode { None, L1, L2 };

std::string to_string(NormMode mode);
NormMode norm_mode_from_string(const std::string& s);

/// Terms ordered lexicographically; df counts documents containing the term
/// at least once.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, int> index;
    std::vector<int> df;
    int n_docs = 0;

    int size() const { return static_cast<int>(terms.size()); }
};

/// Sparse non-negative vector of fixed dimension. Entries are sorted by
/// index, zeros omitted.
struct FeatureVector {
    int dim = 0;
    std::vector<std::pair<int, double>> entries;
    NormMode norm_mode = NormMode::None;

    bool is_zero() const { return entries.empty(); }
};

struct FeatureSpace {
    Vocabulary vocab;
    std::vector<double> idf;       // per vocab term
    std::vector<int> selected;     // kept vocab indices, ascending
    // selected_pos[vocab index] = compact index in 0..M-1, or -1 if dropped
    std::vector<int> selected_pos;

    int dim() const { return static_cast<int>(selected.size()); }
};

/// Keep a term iff min_df_frac <= df/n_docs <= max_df_frac (inclusive).
/// Throws std::runtime_error if every term is filtered out.
Vocabulary build_vocabulary(const std::vector<TokenList>& train, double min_df_frac,
                            double max_df_frac);

/// idf(t) = ln((1 + n_docs) / (1 + df(t))) + 1; strictly positive.
std::vector<double> compute_idf(const Vocabulary& vocab);

/// Raw tf x idf over the full vocabulary (dim = |vocab|), unnormalized.
/// Out-of-vocabulary tokens are ignored.
FeatureVector vectorize_full(const TokenList& doc, const Vocabulary& vocab,
                             const std::vector<double>& idf);

/// One global feature ranking: vocab indices ordered by total tf-idf weight
/// over the training vectors, descending, ties broken by lexicographic term
/// order. Selections for different M nest (top-M is a prefix).
std::vector<int> rank_features(const std::vector<FeatureVector>& train_vectors,
                               const Vocabulary& vocab);

/// FeatureSpace keeping the top min(M, |vocab|) features of rank_features.
FeatureSpace select_top_features(const std::vector<FeatureVector>& train_vectors,
                                 const Vocabulary& vocab, const std::vector<double>& idf,
                                 int M);

/// As above but reusing a precomputed ranking (sweep path).
FeatureSpace make_space(const Vocabulary& vocab, const std::vector<double>& idf,
                        const std::vector<int>& ranking, int M);

/// Project a full-vocabulary vector onto the selected dimensions, re-indexed
/// 0..M-1, then normalize.
FeatureVector project(const FeatureVector& full, const FeatureSpace& space,
                      NormMode mode);

/// Preprocessed tokens -> truncated, normalized vector in the given space.
FeatureVector vectorize(const TokenList& doc, const FeatureSpace& space, NormMode mode);

/// Scale so the l1 or l2 constraint holds; the zero vector is returned
/// unchanged with the mode recorded.
FeatureVector normalize(FeatureVector v, NormMode mode);

/// Default dimensionality grid for sweeps, clipped to vocab size by run_sweep.
std::vector<int> default_dims_grid();

}  // namespace docsim

#endif
