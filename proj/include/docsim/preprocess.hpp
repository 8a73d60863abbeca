#ifndef DOCSIM_PREPROCESS_HPP
#define DOCSIM_PREPROCESS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace docsim {

using TokenList = std::vector<std::string>;

/// The bundled English stopword list (318 entries, lowercase, sorted).
const std::vector<std::string>& english_stopwords();

/// Hex FNV-1a 64 hash of the bundled list in its one-word-per-line text form.
/// Recorded in sweep reports for provenance.
std::string stopword_list_hash();

struct PreprocessConfig {
    int min_word_length = 3;
    bool lowercase = true;
    bool strip_emails = true;
    bool strip_urls = true;
    bool letters_only = true;
    bool stem = true;
    std::vector<std::string> stopwords = english_stopwords();
};

/// Original Porter (1980) stemmer, all five step groups.
/// Input must match [a-z]+.
std::string porter_stem(std::string token);

/// Fixed pipeline: strip emails, strip URLs, lowercase, replace non-letters
/// with spaces, split, drop tokens shorter than min_word_length, drop
/// stopwords, Porter-stem. Empty input gives an empty list.
///
/// An email is a maximal non-space run containing '@' with a '.' somewhere
/// after it; a URL is a run starting with http://, https:// or www.
TokenList preprocess_document(std::string_view text, const PreprocessConfig& config);

}  // namespace docsim

#endif
