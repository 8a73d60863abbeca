#ifndef DOCSIM_EVAL_HPP
#define DOCSIM_EVAL_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "docsim/cbr.hpp"
#include "docsim/corpus.hpp"
#include "docsim/features.hpp"

namespace docsim {

double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& truths);

/// rows = truth, columns = prediction.
struct ConfusionMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<long>> counts;

    long total() const;
    long trace() const;
};

ConfusionMatrix confusion(const std::vector<std::string>& predictions,
                          const std::vector<std::string>& truths,
                          const std::vector<std::string>& labels);

struct PrfRow {
    std::string label;
    double precision = 0.0;
    double recall = 0.0;
    double fbeta = 0.0;
};

/// Per-label precision, recall and F_beta; any 0/0 is defined as 0.
std::vector<PrfRow> precision_recall_fbeta(const ConfusionMatrix& cm, double beta);

struct SweepRow {
    Metric metric;
    int dimension = 0;
    NormMode norm_mode = NormMode::None;
    double accuracy = 0.0;
    long n_queries = 0;
    long n_zero_vectors = 0;
    bool empty_vocabulary = false;  // row flagged, not fatal
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::string stopword_hash;
    std::string config_echo;                 // flat key-value text, reparseable
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
};

struct SweepConfig {
    PreprocessConfig preprocess;
    double min_df_frac = 0.01;
    double max_df_frac = 0.5;
    std::vector<int> dims = default_dims_grid();
    NormMode norm_mode = NormMode::None;
    std::vector<Metric> metrics = {Metric::Euclidean, Metric::Cosine, Metric::TsSs};
    int jobs = 0;
    std::string config_echo;  // verbatim run configuration for provenance
};

/// The dimensionality sweep: per M, build the feature space from train only
/// (nested top-M selections from one global ranking), vectorize both sides,
/// classify every test query per metric, record accuracy. Zero-vector queries
/// are still classified and counted in n_zero_vectors.
SweepReport run_sweep(const Corpus& train, const Corpus& test, const SweepConfig& config);

/// CSV with header metric,dimension,normalization,accuracy,n_queries,n_zero_vectors.
/// Bit-identical across runs of the same inputs.
std::string report_to_csv(const SweepReport& report);

/// JSON provenance sidecar (stopword hash, config echo, corpus ids).
std::string report_provenance_json(const SweepReport& report);

void write_report(const SweepReport& report, const std::filesystem::path& csv_path);

}  // namespace docsim

#endif
