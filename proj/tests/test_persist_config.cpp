#include <doctest.h>

#include <filesystem>
#include <random>

#include "docsim/config.hpp"
#include "docsim/persist.hpp"
#include "support/fixtures.hpp"

using namespace docsim;
namespace fs = std::filesystem;

TEST_CASE("space and case base round-trip losslessly") {
    const auto dir = fs::temp_directory_path() / "docsim_persist";
    fs::remove_all(dir);

    std::mt19937_64 rng(42);
    const std::vector<TokenList> docs = {{"apple", "pear", "pear"},
                                         {"apple", "plum"},
                                         {"plum", "plum", "pear"}};
    const Vocabulary vocab = build_vocabulary(docs, 0.0, 1.0);
    const auto idf = compute_idf(vocab);
    std::vector<FeatureVector> full;
    for (const auto& d : docs) full.push_back(vectorize_full(d, vocab, idf));
    const FeatureSpace space = select_top_features(full, vocab, idf, 2);

    std::vector<Case> cases;
    const char* labels[] = {"x", "y", "x"};
    for (std::size_t i = 0; i < docs.size(); ++i)
        cases.push_back(Case{"doc" + std::to_string(i), project(full[i], space, NormMode::L2),
                             labels[i]});
    // add a zero vector case: survives persistence via labels.csv
    cases.push_back(Case{"zero", FeatureVector{space.dim(), {}, NormMode::L2}, "y"});
    const CaseBase base = make_case_base(cases, space.dim());

    const PersistedSpace ps{space, NormMode::L2, stopword_list_hash()};
    save_case_base(dir, ps, base);

    const PersistedSpace loaded = load_space(dir);
    CHECK(loaded.space.vocab.terms == space.vocab.terms);
    CHECK(loaded.space.vocab.df == space.vocab.df);
    CHECK(loaded.space.vocab.n_docs == space.vocab.n_docs);
    CHECK(loaded.space.selected == space.selected);
    CHECK(loaded.norm_mode == NormMode::L2);
    CHECK(loaded.stopword_hash == ps.stopword_hash);
    for (std::size_t i = 0; i < space.idf.size(); ++i)
        CHECK(loaded.space.idf[i] == space.idf[i]);  // exact

    const CaseBase rebase = load_case_base(dir, loaded);
    REQUIRE(rebase.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(rebase.cases[i].id == base.cases[i].id);
        CHECK(rebase.cases[i].label == base.cases[i].label);
        REQUIRE(rebase.cases[i].vector.entries.size() == base.cases[i].vector.entries.size());
        for (std::size_t e = 0; e < base.cases[i].vector.entries.size(); ++e) {
            CHECK(rebase.cases[i].vector.entries[e].first ==
                  base.cases[i].vector.entries[e].first);
            // 17 significant digits: bit-exact after round-trip
            CHECK(rebase.cases[i].vector.entries[e].second ==
                  base.cases[i].vector.entries[e].second);
        }
    }
}

TEST_CASE("run config text round-trip") {
    RunConfig config;
    config.min_word_length = 4;
    config.stem = false;
    config.min_df = 0.015;
    config.max_df = 0.4;
    config.dims = {10, 20, 40};
    config.norm = NormMode::L1;
    config.metrics = {Metric::Cosine, Metric::TsSs};
    config.seed = 1234567;
    config.jobs = 3;

    const std::string text = to_text(config);
    CHECK(parse_config_text(text) == config);

    SUBCASE("comments and overrides") {
        const RunConfig parsed = parse_config_text("# comment\nnorm = l2\n", config);
        CHECK(parsed.norm == NormMode::L2);
        CHECK(parsed.dims == config.dims);
    }

    SUBCASE("unknown key rejected") {
        CHECK_THROWS_AS(parse_config_text("nope = 1\n"), std::runtime_error);
    }

    SUBCASE("invalid df bounds rejected") {
        CHECK_THROWS_AS(parse_config_text("min_df = 0.9\nmax_df = 0.5\n"),
                        std::runtime_error);
    }
}

TEST_CASE("list parsing") {
    CHECK(parse_dims_list("10, 25,50") == std::vector<int>{10, 25, 50});
    CHECK_THROWS_AS(parse_dims_list("10,zero"), std::runtime_error);
    CHECK_THROWS_AS(parse_dims_list(""), std::runtime_error);
    CHECK(parse_metrics_list("ed,cs,tsss") ==
          std::vector<Metric>{Metric::Euclidean, Metric::Cosine, Metric::TsSs});
    CHECK_THROWS_AS(parse_metrics_list("manhattan"), std::runtime_error);
}
