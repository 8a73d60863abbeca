#include "support/fixtures.hpp"

#include <cstdio>
#include <set>
#include <string>

#include <json.hpp>

namespace docsim::test {

namespace {

const char kConsonants[] = "bdfgklmnprstvz";
const char kVowels[] = "aiou";

std::string make_word(std::mt19937_64& rng, int syllables) {
    std::string w;
    for (int s = 0; s < syllables; ++s) {
        w += kConsonants[rng() % (sizeof kConsonants - 1)];
        w += kVowels[rng() % (sizeof kVowels - 1)];
    }
    return w;
}

std::vector<std::string> make_pool(std::mt19937_64& rng, std::size_t n,
                                   std::set<std::string>& taken) {
    std::vector<std::string> pool;
    while (pool.size() < n) {
        std::string w = make_word(rng, 3 + static_cast<int>(rng() % 2));
        if (taken.insert(w).second) pool.push_back(std::move(w));
    }
    return pool;
}

const std::string& pick(std::mt19937_64& rng, const std::vector<std::string>& pool) {
    return pool[rng() % pool.size()];
}

void push_doc(Corpus& corpus, std::string id, const std::string& label,
              std::string text) {
    corpus.labels.insert(label);
    corpus.documents.push_back({std::move(id), label, std::move(text)});
}

}  // namespace

std::pair<Corpus, Corpus> make_mini_corpus() {
    std::mt19937_64 rng(0x5eedu);
    std::set<std::string> taken;
    const std::vector<std::string> labels = {"alpha", "beta", "gamma"};
    std::vector<std::vector<std::string>> class_pool;
    for (std::size_t c = 0; c < 3; ++c) class_pool.push_back(make_pool(rng, 30, taken));
    const std::vector<std::string> shared = make_pool(rng, 30, taken);

    Corpus train, test;
    int train_no = 0, test_no = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        for (int d = 0; d < 20; ++d) {
            const auto len = 15 + rng() % 26;
            std::string text;
            for (std::size_t t = 0; t < len; ++t) {
                if (!text.empty()) text += ' ';
                text += rng() % 10 < 6 ? pick(rng, class_pool[c]) : pick(rng, shared);
            }
            text += '.';
            char id[32];
            if (d < 15) {
                std::snprintf(id, sizeof id, "mini-train-%03d", train_no++);
                push_doc(train, id, labels[c], text);
            } else {
                std::snprintf(id, sizeof id, "mini-test-%03d", test_no++);
                push_doc(test, id, labels[c], text);
            }
        }
    }
    return {std::move(train), std::move(test)};
}

std::pair<Corpus, Corpus> make_disjoint_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::string> taken;
    const std::vector<std::string> labels = {"red", "green", "blue"};
    std::vector<std::vector<std::string>> class_pool;
    for (std::size_t c = 0; c < 3; ++c) class_pool.push_back(make_pool(rng, 60, taken));

    Corpus train, test;
    int train_no = 0, test_no = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        for (int d = 0; d < 170; ++d) {
            const auto len = 10 + rng() % 90;
            std::string text;
            for (std::size_t t = 0; t < len; ++t) {
                if (!text.empty()) text += ' ';
                text += pick(rng, class_pool[c]);
            }
            char id[32];
            if (d < 128) {
                std::snprintf(id, sizeof id, "dj-train-%03d", train_no++);
                push_doc(train, id, labels[c], text);
            } else {
                std::snprintf(id, sizeof id, "dj-test-%03d", test_no++);
                push_doc(test, id, labels[c], text);
            }
        }
    }
    return {std::move(train), std::move(test)};
}

std::pair<Corpus, Corpus> make_noisy_overlap_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::string> taken;
    const std::vector<std::string> labels = {"red", "green", "blue"};
    std::vector<std::vector<std::string>> class_pool;
    for (std::size_t c = 0; c < 3; ++c) class_pool.push_back(make_pool(rng, 40, taken));
    const std::vector<std::string> noise = make_pool(rng, 300, taken);

    Corpus train, test;
    int train_no = 0, test_no = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        for (int d = 0; d < 170; ++d) {
            // Document lengths span a decade so vector magnitudes differ a lot.
            const auto len = 20 + rng() % 181;
            // Bursty noise: a few noise words repeated many times per document.
            std::vector<std::string> bursts;
            for (int b = 0; b < 5; ++b) bursts.push_back(pick(rng, noise));
            std::string text;
            for (std::size_t t = 0; t < len; ++t) {
                if (!text.empty()) text += ' ';
                const auto roll = rng() % 10;
                if (roll < 3) text += pick(rng, class_pool[c]);
                else if (roll < 8) text += pick(rng, bursts);
                else text += pick(rng, noise);
            }
            char id[32];
            if (d < 128) {
                std::snprintf(id, sizeof id, "no-train-%03d", train_no++);
                push_doc(train, id, labels[c], text);
            } else {
                std::snprintf(id, sizeof id, "no-test-%03d", test_no++);
                push_doc(test, id, labels[c], text);
            }
        }
    }
    return {std::move(train), std::move(test)};
}

FeatureVector random_sparse_vector(std::mt19937_64& rng, int dim, double density,
                                   bool allow_zero) {
    FeatureVector v;
    v.dim = dim;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> weight(0.1, 10.0);
    for (int i = 0; i < dim; ++i)
        if (unit(rng) < density) v.entries.emplace_back(i, weight(rng));
    if (!allow_zero && v.entries.empty())
        v.entries.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(dim)),
                               weight(rng));
    return v;
}

std::string corpus_to_jsonl(const Corpus& corpus) {
    std::string out;
    for (const auto& d : corpus.documents) {
        nlohmann::json j;
        j["id"] = d.id;
        j["label"] = d.label;
        j["text"] = d.text;
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace docsim::test
