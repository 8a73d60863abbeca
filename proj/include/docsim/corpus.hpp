#ifndef DOCSIM_CORPUS_HPP
#define DOCSIM_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace docsim {

/// One labeled text unit. `text` may be empty; such documents flow through
/// the pipeline and become zero vectors.
struct RawDocument {
    std::string id;
    std::string label;
    std::string text;
};

struct Corpus {
    std::vector<RawDocument> documents;  // ingestion order, stable
    std::set<std::string> labels;

    std::size_t size() const { return documents.size(); }
};

enum class CorpusFormat { Jsonl, LabeledDirs };

/// Load a corpus from disk.
///
/// jsonl: UTF-8, one object per line, required keys exactly {"id","label","text"},
/// no BOM. Documents keep line order.
/// labeled-dirs: immediate subdirectory names are labels, files inside are
/// documents (id = relative path). Files enumerate lexicographically.
///
/// Throws std::runtime_error on missing path, malformed line (with line
/// number), duplicate id, or missing key.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

/// Deterministic disjoint train/test partition. |test| = round(fraction*n)
/// clamped to [1, n-1]. Same (corpus, fraction, seed) gives the identical
/// split on any machine: the permutation is a Fisher-Yates shuffle driven by
/// std::mt19937_64 draws reduced modulo the remaining range.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double test_fraction,
                                       std::uint64_t seed);

}  // namespace docsim

#endif
