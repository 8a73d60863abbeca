#include "docsim/preprocess.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <string>
#include <unordered_set>

namespace docsim {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool is_email(std::string_view run) {
    const auto at = run.find('@');
    if (at == std::string_view::npos) return false;
    return run.find('.', at) != std::string_view::npos;
}

bool iprefix(std::string_view run, std::string_view prefix) {
    if (run.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(run[i])) != prefix[i]) return false;
    return true;
}

bool is_url(std::string_view run) {
    return iprefix(run, "http://") || iprefix(run, "https://") || iprefix(run, "www.");
}

}  // namespace

std::string stopword_list_hash() {
    std::string text;
    for (const auto& w : english_stopwords()) {
        text += w;
        text += '\n';
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(text)));
    return buf;
}

TokenList preprocess_document(std::string_view text, const PreprocessConfig& config) {
    // Stages 1-2: drop email / URL runs (maximal non-space runs).
    std::string kept;
    kept.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            kept += ' ';
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view run = text.substr(i, end - i);
        const bool drop = (config.strip_emails && is_email(run)) ||
                          (config.strip_urls && is_url(run));
        if (!drop) kept.append(run);
        kept += ' ';
        i = end;
    }

    // Stages 3-4: lowercase, non-letters become spaces (non-ASCII included).
    for (char& c : kept) {
        const auto u = static_cast<unsigned char>(c);
        if (config.lowercase) c = static_cast<char>(std::tolower(u));
        if (config.letters_only && (c < 'a' || c > 'z')) c = ' ';
    }

    std::unordered_set<std::string_view> stop(config.stopwords.begin(),
                                              config.stopwords.end());

    // Stages 5-8: split, length filter, stopword filter, stem.
    TokenList tokens;
    std::size_t pos = 0;
    while (pos < kept.size()) {
        while (pos < kept.size() && kept[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < kept.size() && kept[end] != ' ') ++end;
        if (end > pos) {
            std::string token = kept.substr(pos, end - pos);
            if (static_cast<int>(token.size()) >= config.min_word_length &&
                !stop.count(token)) {
                tokens.push_back(config.stem ? porter_stem(std::move(token))
                                             : std::move(token));
            }
        }
        pos = end;
    }
    return tokens;
}

}  // namespace docsim
