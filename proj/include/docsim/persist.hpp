#ifndef DOCSIM_PERSIST_HPP
#define DOCSIM_PERSIST_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "docsim/cbr.hpp"
#include "docsim/features.hpp"

namespace docsim {

/// On-disk layout of a persisted feature space + vector set (one directory):
///   space.json   vocabulary, df, idf, selection, norm mode, stopword hash
///   vectors.csv  sparse triples doc_id,feature_index,weight (17 sig digits)
///   labels.csv   case_id,label
/// Round-trips are lossless at full double precision.

struct PersistedSpace {
    FeatureSpace space;
    NormMode norm_mode = NormMode::None;
    std::string stopword_hash;
};

void save_space(const std::filesystem::path& dir, const PersistedSpace& ps);
PersistedSpace load_space(const std::filesystem::path& dir);

void save_vectors(const std::filesystem::path& dir,
                  const std::vector<std::pair<std::string, FeatureVector>>& vectors);
std::vector<std::pair<std::string, FeatureVector>> load_vectors(
    const std::filesystem::path& dir, int dim, NormMode mode);

void save_labels(const std::filesystem::path& dir,
                 const std::vector<std::pair<std::string, std::string>>& labels);
std::vector<std::pair<std::string, std::string>> load_labels(
    const std::filesystem::path& dir);

/// Convenience: persist / restore a full case base alongside the space.
void save_case_base(const std::filesystem::path& dir, const PersistedSpace& ps,
                    const CaseBase& base);
CaseBase load_case_base(const std::filesystem::path& dir, const PersistedSpace& ps);

/// Doubles formatted with 17 significant digits (%.17g): round-trip exact.
std::string format_weight(double w);

}  // namespace docsim

#endif
