#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "docsim/features.hpp"

using namespace docsim;

namespace {

double entry(const FeatureVector& v, int idx) {
    for (const auto& [i, w] : v.entries)
        if (i == idx) return w;
    return 0.0;
}

}  // namespace

TEST_CASE("build_vocabulary") {
    const std::vector<TokenList> docs = {{"aaa", "bbb"}, {"aaa"}};

    SUBCASE("direct df counts") {
        const Vocabulary v = build_vocabulary(docs, 0.0, 1.0);
        REQUIRE(v.terms == std::vector<std::string>{"aaa", "bbb"});
        CHECK(v.df == std::vector<int>{2, 1});
        CHECK(v.n_docs == 2);
    }

    SUBCASE("max_df bound is inclusive") {
        const Vocabulary v = build_vocabulary(docs, 0.0, 0.5);
        // aaa has df/N = 1 > 0.5; bbb has exactly 0.5 and stays
        CHECK(v.terms == std::vector<std::string>{"bbb"});
    }

    SUBCASE("min_df drops rare terms") {
        std::vector<TokenList> many(100, TokenList{"common"});
        many[0].push_back("rare");
        const Vocabulary v = build_vocabulary(many, 0.02, 1.0);
        CHECK(v.index.count("rare") == 0);
        CHECK(v.index.count("common") == 1);
    }

    SUBCASE("df counts documents, not occurrences") {
        const Vocabulary v = build_vocabulary({{"aaa", "aaa", "aaa"}, {"bbb"}}, 0.0, 1.0);
        CHECK(v.df[v.index.at("aaa")] == 1);
    }

    SUBCASE("everything filtered out is an error") {
        CHECK_THROWS_AS(build_vocabulary(docs, 0.9, 0.95), std::runtime_error);
    }
}

TEST_CASE("compute_idf") {
    const Vocabulary v = build_vocabulary({{"aaa", "bbb"}, {"aaa"}, {"aaa"}}, 0.0, 1.0);
    const auto idf = compute_idf(v);
    // aaa: df = n_docs -> ln(1) + 1 = 1
    CHECK(idf[v.index.at("aaa")] == doctest::Approx(1.0).epsilon(1e-15));
    // bbb: n=3, df=1 -> ln(4/2) + 1
    CHECK(idf[v.index.at("bbb")] == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-15));
    // non-increasing in df
    CHECK(idf[v.index.at("bbb")] > idf[v.index.at("aaa")]);
}

TEST_CASE("vectorize against a hand-computed tf-idf table") {
    // 3 training docs; counts and idf recomputed by hand below.
    const std::vector<TokenList> train = {
        {"net", "net", "ball"}, {"net", "goal"}, {"ball", "goal", "goal"}};
    const Vocabulary vocab = build_vocabulary(train, 0.0, 1.0);
    const auto idf = compute_idf(vocab);
    const FeatureSpace space = select_top_features(
        {vectorize_full(train[0], vocab, idf), vectorize_full(train[1], vocab, idf),
         vectorize_full(train[2], vocab, idf)},
        vocab, idf, vocab.size());

    // df: ball 2, goal 2, net 2; all idf = ln(4/3)+1
    const double w = std::log(4.0 / 3.0) + 1.0;
    const FeatureVector v0 = vectorize(train[0], space, NormMode::None);
    CHECK(entry(v0, space.selected_pos[vocab.index.at("net")]) ==
          doctest::Approx(2.0 * w).epsilon(1e-12));
    CHECK(entry(v0, space.selected_pos[vocab.index.at("ball")]) ==
          doctest::Approx(w).epsilon(1e-12));
    CHECK(entry(v0, space.selected_pos[vocab.index.at("goal")]) == 0.0);

    SUBCASE("OOV-only document gives the zero vector") {
        const FeatureVector z = vectorize({"unseen", "words"}, space, NormMode::L2);
        CHECK(z.is_zero());
        CHECK(z.dim == space.dim());
        CHECK(z.norm_mode == NormMode::L2);
    }

    SUBCASE("single kept term under l1 has weight 1") {
        const FeatureVector v = vectorize({"net"}, space, NormMode::L1);
        REQUIRE(v.entries.size() == 1);
        CHECK(v.entries[0].second == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("pre-normalization weights are linear in token multiplicity") {
        TokenList doubled;
        for (const auto& t : train[0]) {
            doubled.push_back(t);
            doubled.push_back(t);
        }
        const FeatureVector v2 = vectorize(doubled, space, NormMode::None);
        for (const auto& [idx, weight] : v0.entries)
            CHECK(entry(v2, idx) == doctest::Approx(2.0 * weight).epsilon(1e-12));
    }
}

TEST_CASE("select_top_features") {
    // two docs, three terms with clearly different total weights
    const std::vector<TokenList> train = {{"xxa", "xxa", "xxa", "xxb"}, {"xxa", "xxc"}};
    const Vocabulary vocab = build_vocabulary(train, 0.0, 1.0);
    const auto idf = compute_idf(vocab);
    std::vector<FeatureVector> full;
    for (const auto& d : train) full.push_back(vectorize_full(d, vocab, idf));

    SUBCASE("M >= |vocab| keeps everything as the identity projection") {
        const FeatureSpace space = select_top_features(full, vocab, idf, 100);
        CHECK(space.dim() == vocab.size());
        for (int i = 0; i < vocab.size(); ++i) CHECK(space.selected[i] == i);
        const FeatureVector untruncated = vectorize(train[0], space, NormMode::None);
        const FeatureVector direct = vectorize_full(train[0], vocab, idf);
        REQUIRE(untruncated.entries.size() == direct.entries.size());
        for (std::size_t i = 0; i < direct.entries.size(); ++i) {
            CHECK(untruncated.entries[i].first == direct.entries[i].first);
            CHECK(untruncated.entries[i].second == direct.entries[i].second);
        }
    }

    SUBCASE("M=1 keeps the heaviest feature") {
        const FeatureSpace space = select_top_features(full, vocab, idf, 1);
        REQUIRE(space.selected.size() == 1);
        CHECK(vocab.terms[space.selected[0]] == "xxa");
    }

    SUBCASE("brute-force oracle agrees on a 10-feature fixture") {
        std::vector<TokenList> docs;
        const char* words[] = {"waa", "wbb", "wcc", "wdd", "wee",
                               "wff", "wgg", "whh", "wii", "wjj"};
        // doc k contains words[k..9], so later words total more weight
        for (int k = 0; k < 10; ++k) {
            TokenList d;
            for (int t = k; t < 10; ++t) d.push_back(words[t]);
            docs.push_back(d);
        }
        const Vocabulary voc = build_vocabulary(docs, 0.0, 1.0);
        const auto idf10 = compute_idf(voc);
        std::vector<FeatureVector> vecs;
        for (const auto& d : docs) vecs.push_back(vectorize_full(d, voc, idf10));

        // oracle: exhaustive total per term
        std::map<std::string, double> totals;
        for (const auto& v : vecs)
            for (const auto& [idx, w] : v.entries) totals[voc.terms[idx]] += w;
        std::vector<std::pair<double, std::string>> ranked;
        for (const auto& [t, w] : totals) ranked.emplace_back(-w, t);
        std::sort(ranked.begin(), ranked.end());

        const FeatureSpace space = select_top_features(vecs, voc, idf10, 4);
        std::set<std::string> kept;
        for (int idx : space.selected) kept.insert(voc.terms[idx]);
        std::set<std::string> expected;
        for (int i = 0; i < 4; ++i) expected.insert(ranked[i].second);
        CHECK(kept == expected);
    }
}

TEST_CASE("normalize") {
    FeatureVector v{2, {{0, 3.0}, {1, 4.0}}, NormMode::None};

    SUBCASE("l2 on a 3-4-5 triangle") {
        const FeatureVector n = normalize(v, NormMode::L2);
        CHECK(n.entries[0].second == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(n.entries[1].second == doctest::Approx(0.8).epsilon(1e-15));
        double sq = 0.0;
        for (const auto& [_, w] : n.entries) sq += w * w;
        CHECK(sq == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("l1 scaling") {
        const FeatureVector n = normalize({2, {{0, 3.0}, {1, 1.0}}, NormMode::None},
                                          NormMode::L1);
        CHECK(n.entries[0].second == doctest::Approx(0.75).epsilon(1e-15));
        CHECK(n.entries[1].second == doctest::Approx(0.25).epsilon(1e-15));
    }

    SUBCASE("zero vector unchanged, mode recorded") {
        const FeatureVector z = normalize({5, {}, NormMode::None}, NormMode::L2);
        CHECK(z.is_zero());
        CHECK(z.norm_mode == NormMode::L2);
    }

    SUBCASE("idempotent") {
        for (NormMode mode : {NormMode::L1, NormMode::L2}) {
            const FeatureVector once = normalize(v, mode);
            const FeatureVector twice = normalize(once, mode);
            for (std::size_t i = 0; i < once.entries.size(); ++i)
                CHECK(twice.entries[i].second ==
                      doctest::Approx(once.entries[i].second).epsilon(1e-12));
        }
    }
}
