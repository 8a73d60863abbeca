#include "docsim/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace fs = std::filesystem;

namespace docsim {

namespace {

Corpus load_jsonl(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());

    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": malformed JSON line: " + e.what());
        }
        for (const char* key : {"id", "label", "text"}) {
            if (!obj.contains(key) || !obj[key].is_string())
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                         ": missing or non-string key \"" + key + "\"");
        }
        RawDocument doc{obj["id"].get<std::string>(), obj["label"].get<std::string>(),
                        obj["text"].get<std::string>()};
        if (doc.id.empty())
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": empty id");
        if (doc.label.empty())
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": empty label");
        if (!seen_ids.insert(doc.id).second)
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": duplicate id \"" + doc.id + "\"");
        corpus.labels.insert(doc.label);
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open document file: " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Corpus load_labeled_dirs(const fs::path& root) {
    std::vector<fs::path> label_dirs;
    for (const auto& entry : fs::directory_iterator(root))
        if (entry.is_directory()) label_dirs.push_back(entry.path());
    std::sort(label_dirs.begin(), label_dirs.end());

    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    for (const auto& dir : label_dirs) {
        const std::string label = dir.filename().string();
        std::vector<fs::path> files;
        for (const auto& entry : fs::recursive_directory_iterator(dir))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            std::string id = fs::relative(file, root).generic_string();
            if (!seen_ids.insert(id).second)
                throw std::runtime_error("duplicate id: " + id);
            corpus.documents.push_back({std::move(id), label, read_file(file)});
            corpus.labels.insert(label);
        }
    }
    return corpus;
}

}  // namespace

Corpus load_corpus(const fs::path& path, CorpusFormat format) {
    if (!fs::exists(path))
        throw std::runtime_error("corpus path does not exist: " + path.string());
    return format == CorpusFormat::Jsonl ? load_jsonl(path) : load_labeled_dirs(path);
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double test_fraction,
                                       std::uint64_t seed) {
    const std::size_t n = corpus.size();
    if (n < 2) throw std::runtime_error("split_corpus: corpus has fewer than 2 documents");
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::runtime_error("split_corpus: test_fraction must be in (0,1)");

    auto n_test = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
    n_test = std::clamp<std::size_t>(n_test, 1, n - 1);

    // Fisher-Yates with explicit modulo draws; std::shuffle is not
    // cross-implementation stable.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % (i + 1)]);

    std::vector<bool> in_test(n, false);
    for (std::size_t i = 0; i < n_test; ++i) in_test[perm[i]] = true;

    Corpus train, test;
    for (std::size_t i = 0; i < n; ++i) {
        Corpus& side = in_test[i] ? test : train;
        side.documents.push_back(corpus.documents[i]);
        side.labels.insert(corpus.documents[i].label);
    }
    return {std::move(train), std::move(test)};
}

}  // namespace docsim
