#ifndef DOCSIM_CONFIG_HPP
#define DOCSIM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "docsim/eval.hpp"

namespace docsim {

/// Full run configuration. Serializes to flat `key = value` text (one key per
/// line, '#' comments); the provenance echo in sweep reports reparses to an
/// equal RunConfig. CLI flags override file values.
struct RunConfig {
    int min_word_length = 3;
    bool lowercase = true;
    bool strip_emails = true;
    bool strip_urls = true;
    bool letters_only = true;
    bool stem = true;
    double min_df = 0.01;
    double max_df = 0.5;
    std::vector<int> dims = default_dims_grid();
    NormMode norm = NormMode::None;
    std::vector<Metric> metrics = {Metric::Euclidean, Metric::Cosine, Metric::TsSs};
    std::uint64_t seed = 42;
    int jobs = 0;

    bool operator==(const RunConfig&) const = default;

    PreprocessConfig preprocess_config() const;
    SweepConfig sweep_config() const;
};

/// Throws std::runtime_error on unknown keys or unparsable values.
RunConfig parse_config_text(const std::string& text, RunConfig base = {});
RunConfig parse_config_file(const std::filesystem::path& path, RunConfig base = {});

/// Canonical flat text form; parse_config_text(to_text(c)) == c.
std::string to_text(const RunConfig& config);

/// "10,25,50" -> {10,25,50}; "ed,cs,tsss" -> metric list.
std::vector<int> parse_dims_list(const std::string& s);
std::vector<Metric> parse_metrics_list(const std::string& s);

}  // namespace docsim

#endif
