#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "docsim/cbr.hpp"
#include "docsim/config.hpp"
#include "docsim/corpus.hpp"
#include "docsim/eval.hpp"
#include "docsim/persist.hpp"
#include "docsim/theory.hpp"

namespace fs = std::filesystem;
using namespace docsim;

namespace {

Corpus load_any(const std::string& path) {
    const CorpusFormat fmt =
        fs::is_directory(path) ? CorpusFormat::LabeledDirs : CorpusFormat::Jsonl;
    return load_corpus(path, fmt);
}

RunConfig load_run_config(const std::string& config_path) {
    RunConfig config;
    if (!config_path.empty()) config = parse_config_file(config_path, config);
    return config;
}

int cmd_featurize(const std::string& train_path, const std::string& config_path,
                  const std::string& out_dir, int dim, const std::string& norm) {
    RunConfig config = load_run_config(config_path);
    if (!norm.empty()) config.norm = norm_mode_from_string(norm);

    const Corpus train = load_any(train_path);
    std::vector<TokenList> tokens;
    for (const auto& d : train.documents)
        tokens.push_back(preprocess_document(d.text, config.preprocess_config()));

    const Vocabulary vocab = build_vocabulary(tokens, config.min_df, config.max_df);
    const auto idf = compute_idf(vocab);
    std::vector<FeatureVector> full(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i)
        full[i] = vectorize_full(tokens[i], vocab, idf);

    const int m = dim > 0 ? dim : vocab.size();
    const FeatureSpace space = select_top_features(full, vocab, idf, m);

    std::vector<Case> cases;
    for (std::size_t i = 0; i < full.size(); ++i)
        cases.push_back(Case{train.documents[i].id, project(full[i], space, config.norm),
                             train.documents[i].label});

    PersistedSpace ps{space, config.norm, stopword_list_hash()};
    save_case_base(out_dir, ps, make_case_base(std::move(cases), space.dim()));
    std::cout << "wrote " << out_dir << " (dim " << space.dim() << ", " << full.size()
              << " vectors)\n";
    return 0;
}

int cmd_query(const std::string& space_dir, const std::string& metric_name,
              const std::string& text, const std::string& file,
              const std::string& config_path) {
    const RunConfig config = load_run_config(config_path);
    const Metric metric = metric_from_string(metric_name);

    std::string query_text = text;
    if (!file.empty()) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open query file: " + file);
        query_text.assign(std::istreambuf_iterator<char>(in),
                          std::istreambuf_iterator<char>());
    }

    const PersistedSpace ps = load_space(space_dir);
    const CaseBase base = load_case_base(space_dir, ps);
    const TokenList tokens = preprocess_document(query_text, config.preprocess_config());
    const FeatureVector query = vectorize(tokens, ps.space, ps.norm_mode);

    const RetrievalResult result = retrieve_nearest(query, base, metric);
    char score_buf[64];
    std::snprintf(score_buf, sizeof score_buf, "%.17g", result.score);
    nlohmann::json j;
    j["case_id"] = result.case_id;
    j["label"] = result.label;
    j["score"] = nlohmann::json::parse(score_buf);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_sweep(const std::string& train_path, const std::string& test_path,
              const std::string& config_path, const std::string& norm,
              const std::string& dims, const std::string& metrics,
              const std::string& out_csv, int jobs) {
    RunConfig config = load_run_config(config_path);
    if (!norm.empty()) config.norm = norm_mode_from_string(norm);
    if (!dims.empty()) config.dims = parse_dims_list(dims);
    if (!metrics.empty()) config.metrics = parse_metrics_list(metrics);
    if (jobs >= 0) config.jobs = jobs;

    const Corpus train = load_any(train_path);
    const Corpus test = load_any(test_path);
    const SweepReport report = run_sweep(train, test, config.sweep_config());
    write_report(report, out_csv);
    std::cout << "wrote " << out_csv << " (" << report.rows.size() << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"document similarity toolkit: tf-idf features, ED/CS/TS-SS retrieval"};
    app.require_subcommand(1);

    // featurize
    auto* featurize = app.add_subcommand("featurize", "build and persist a feature space");
    std::string f_train, f_config, f_out, f_norm;
    int f_dim = 0;
    featurize->add_option("--train", f_train, "training corpus (jsonl file or labeled dirs)")
        ->required();
    featurize->add_option("--config", f_config, "flat key=value config file");
    featurize->add_option("--out", f_out, "output directory")->required();
    featurize->add_option("--dim", f_dim, "feature dimensionality (default: all)");
    featurize->add_option("--norm", f_norm, "normalization: none|l1|l2");

    // query
    auto* query = app.add_subcommand("query", "retrieve the nearest case for a text");
    std::string q_space, q_metric, q_text, q_file, q_config;
    query->add_option("--space", q_space, "persisted space directory")->required();
    query->add_option("--metric", q_metric, "ed|cs|tsss")->required();
    auto* q_text_opt = query->add_option("--text", q_text, "query text");
    query->add_option("--file", q_file, "query text file")->excludes(q_text_opt);
    query->add_option("--config", q_config, "flat key=value config file");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "dimensionality x metric accuracy sweep");
    std::string s_train, s_test, s_config, s_norm, s_dims, s_metrics, s_out;
    int s_jobs = -1;
    sweep->add_option("--train", s_train, "training corpus")->required();
    sweep->add_option("--test", s_test, "test corpus")->required();
    sweep->add_option("--config", s_config, "flat key=value config file");
    sweep->add_option("--norm", s_norm, "normalization: none|l1|l2");
    sweep->add_option("--dims", s_dims, "comma-separated dimensionality grid");
    sweep->add_option("--metrics", s_metrics, "comma-separated subset of ed,cs,tsss");
    sweep->add_option("--out", s_out, "output CSV path")->required();
    sweep->add_option("--jobs", s_jobs, "worker cap (0 = all cores)");

    // theory
    auto* theory = app.add_subcommand("theory", "curse-of-dimensionality calculators");
    theory->require_subcommand(1);
    auto* nn_dist = theory->add_subcommand(
        "nn-distance", "median nearest-neighbor distance in the unit ball");
    int t_m = 0;
    long t_n = 0;
    nn_dist->add_option("--m", t_m, "dimension M")->required();
    nn_dist->add_option("--n", t_n, "sample count N")->required();
    auto* req_n = theory->add_subcommand(
        "required-n", "points needed for a target median distance");
    double t_d = 0.0;
    int t_m2 = 0;
    req_n->add_option("--d", t_d, "target median distance in (0,1)")->required();
    req_n->add_option("--m", t_m2, "dimension M")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*featurize) return cmd_featurize(f_train, f_config, f_out, f_dim, f_norm);
        if (*query) {
            if (q_text.empty() && q_file.empty()) {
                std::cerr << "query: one of --text or --file is required\n";
                return 1;
            }
            return cmd_query(q_space, q_metric, q_text, q_file, q_config);
        }
        if (*sweep)
            return cmd_sweep(s_train, s_test, s_config, s_norm, s_dims, s_metrics, s_out,
                             s_jobs);
        if (*nn_dist) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", median_nn_distance(t_m, t_n));
            std::cout << buf << "\n";
            return 0;
        }
        if (*req_n) {
            const double raw = required_points(t_d, t_m2);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", raw);
            std::cout << buf << " (ceil " << static_cast<long long>(std::ceil(raw)) << ")\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
