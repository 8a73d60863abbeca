#include "docsim/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace docsim {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& truths) {
    if (predictions.size() != truths.size())
        throw std::runtime_error("accuracy: length mismatch");
    if (predictions.empty()) throw std::runtime_error("accuracy: empty input");
    long correct = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i)
        if (predictions[i] == truths[i]) ++correct;
    return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

long ConfusionMatrix::total() const {
    long t = 0;
    for (const auto& row : counts)
        for (long c : row) t += c;
    return t;
}

long ConfusionMatrix::trace() const {
    long t = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
    return t;
}

ConfusionMatrix confusion(const std::vector<std::string>& predictions,
                          const std::vector<std::string>& truths,
                          const std::vector<std::string>& labels) {
    if (predictions.size() != truths.size())
        throw std::runtime_error("confusion: length mismatch");
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < labels.size(); ++i) pos.emplace(labels[i], i);

    ConfusionMatrix cm;
    cm.labels = labels;
    cm.counts.assign(labels.size(), std::vector<long>(labels.size(), 0));
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        auto t = pos.find(truths[i]);
        auto p = pos.find(predictions[i]);
        if (t == pos.end()) throw std::runtime_error("confusion: unknown label " + truths[i]);
        if (p == pos.end())
            throw std::runtime_error("confusion: unknown label " + predictions[i]);
        ++cm.counts[t->second][p->second];
    }
    return cm;
}

std::vector<PrfRow> precision_recall_fbeta(const ConfusionMatrix& cm, double beta) {
    if (beta <= 0.0) throw std::runtime_error("precision_recall_fbeta: beta must be > 0");
    const std::size_t n = cm.labels.size();
    std::vector<PrfRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        long col_sum = 0, row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            col_sum += cm.counts[j][i];
            row_sum += cm.counts[i][j];
        }
        const long tp = cm.counts[i][i];
        const double p = col_sum > 0 ? static_cast<double>(tp) / col_sum : 0.0;
        const double r = row_sum > 0 ? static_cast<double>(tp) / row_sum : 0.0;
        const double b2 = beta * beta;
        const double denom = b2 * p + r;
        rows[i] = {cm.labels[i], p, r, denom > 0.0 ? (1.0 + b2) * p * r / denom : 0.0};
    }
    return rows;
}

SweepReport run_sweep(const Corpus& train, const Corpus& test, const SweepConfig& config) {
    if (config.dims.empty()) throw std::runtime_error("run_sweep: empty dims grid");

    SweepReport report;
    report.stopword_hash = stopword_list_hash();
    report.config_echo = config.config_echo;
    for (const auto& d : train.documents) report.train_ids.push_back(d.id);
    for (const auto& d : test.documents) report.test_ids.push_back(d.id);

    std::vector<TokenList> train_tokens(train.size()), test_tokens(test.size());
    const long nt = static_cast<long>(train.size());
    const long nq = static_cast<long>(test.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < nt; ++i)
        train_tokens[static_cast<std::size_t>(i)] =
            preprocess_document(train.documents[static_cast<std::size_t>(i)].text,
                                config.preprocess);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < nq; ++i)
        test_tokens[static_cast<std::size_t>(i)] =
            preprocess_document(test.documents[static_cast<std::size_t>(i)].text,
                                config.preprocess);

    std::vector<std::string> truths;
    for (const auto& d : test.documents) truths.push_back(d.label);

    Vocabulary vocab;
    bool vocab_ok = true;
    try {
        vocab = build_vocabulary(train_tokens, config.min_df_frac, config.max_df_frac);
    } catch (const std::runtime_error&) {
        vocab_ok = false;
    }

    if (!vocab_ok) {
        for (Metric metric : config.metrics)
            for (int m : config.dims)
                report.rows.push_back({metric, m, config.norm_mode,
                                       std::nan(""), 0, 0, true});
        return report;
    }

    const std::vector<double> idf = compute_idf(vocab);
    std::vector<FeatureVector> train_full(train.size()), test_full(test.size());
    for (std::size_t i = 0; i < train.size(); ++i)
        train_full[i] = vectorize_full(train_tokens[i], vocab, idf);
    for (std::size_t i = 0; i < test.size(); ++i)
        test_full[i] = vectorize_full(test_tokens[i], vocab, idf);

    // One global ranking; per-M selections nest.
    const std::vector<int> ranking = rank_features(train_full, vocab);

    // Clip the grid to the vocabulary size, dropping duplicates it creates.
    std::vector<int> dims;
    for (int m : config.dims) {
        const int eff = std::min<int>(m, vocab.size());
        if (eff >= 1 && std::find(dims.begin(), dims.end(), eff) == dims.end())
            dims.push_back(eff);
    }

    struct Cell {
        double acc;
        long zeros;
    };
    std::unordered_map<long long, Cell> cells;  // key = metric_index * 1e6 + dim

    for (int m : dims) {
        const FeatureSpace space = make_space(vocab, idf, ranking, m);
        std::vector<Case> cases(train.size());
        for (std::size_t i = 0; i < train.size(); ++i)
            cases[i] = Case{train.documents[i].id,
                            project(train_full[i], space, config.norm_mode),
                            train.documents[i].label};
        const CaseBase base = make_case_base(std::move(cases), space.dim());

        std::vector<FeatureVector> queries(test.size());
        long zeros = 0;
        for (std::size_t i = 0; i < test.size(); ++i) {
            queries[i] = project(test_full[i], space, config.norm_mode);
            if (queries[i].is_zero()) ++zeros;
        }

        for (std::size_t mi = 0; mi < config.metrics.size(); ++mi) {
            const auto preds = classify_batch(queries, base, config.metrics[mi], config.jobs);
            cells[static_cast<long long>(mi) * 1000000 + m] =
                Cell{accuracy(preds, truths), zeros};
        }
    }

    for (std::size_t mi = 0; mi < config.metrics.size(); ++mi)
        for (int m : dims) {
            const Cell& c = cells.at(static_cast<long long>(mi) * 1000000 + m);
            report.rows.push_back({config.metrics[mi], m, config.norm_mode, c.acc,
                                   static_cast<long>(test.size()), c.zeros, false});
        }
    return report;
}

std::string report_to_csv(const SweepReport& report) {
    std::string csv = "metric,dimension,normalization,accuracy,n_queries,n_zero_vectors\n";
    for (const auto& row : report.rows) {
        csv += to_string(row.metric);
        csv += ',';
        csv += std::to_string(row.dimension);
        csv += ',';
        csv += to_string(row.norm_mode);
        csv += ',';
        csv += row.empty_vocabulary ? "nan" : format_double(row.accuracy);
        csv += ',';
        csv += std::to_string(row.n_queries);
        csv += ',';
        csv += std::to_string(row.n_zero_vectors);
        csv += '\n';
    }
    return csv;
}

std::string report_provenance_json(const SweepReport& report) {
    nlohmann::json j;
    j["stopword_hash"] = report.stopword_hash;
    j["config"] = report.config_echo;
    j["train_ids"] = report.train_ids;
    j["test_ids"] = report.test_ids;
    nlohmann::json flagged = nlohmann::json::array();
    for (const auto& row : report.rows)
        if (row.empty_vocabulary)
            flagged.push_back({{"metric", to_string(row.metric)},
                               {"dimension", row.dimension}});
    j["empty_vocabulary_rows"] = flagged;
    return j.dump(2) + "\n";
}

void write_report(const SweepReport& report, const std::filesystem::path& csv_path) {
    {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + csv_path.string());
        out << report_to_csv(report);
    }
    std::filesystem::path sidecar = csv_path;
    sidecar.replace_extension(".json");
    std::ofstream out(sidecar, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + sidecar.string());
    out << report_provenance_json(report);
}

}  // namespace docsim
