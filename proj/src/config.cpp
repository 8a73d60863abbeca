#include "docsim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace docsim {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw std::runtime_error("config: bad boolean for " + key + ": " + v);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
std::string join(const std::vector<T>& xs, std::string (*fmt)(T)) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += fmt(xs[i]);
    }
    return out;
}

}  // namespace

std::vector<int> parse_dims_list(const std::string& s) {
    std::vector<int> dims;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        int v = 0;
        std::size_t used = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("bad dimension value: " + item);
        }
        if (used != item.size() || v < 1)
            throw std::runtime_error("bad dimension value: " + item);
        dims.push_back(v);
    }
    if (dims.empty()) throw std::runtime_error("empty dims list");
    return dims;
}

std::vector<Metric> parse_metrics_list(const std::string& s) {
    std::vector<Metric> metrics;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) metrics.push_back(metric_from_string(item));
    }
    if (metrics.empty()) throw std::runtime_error("empty metrics list");
    return metrics;
}

PreprocessConfig RunConfig::preprocess_config() const {
    PreprocessConfig pc;
    pc.min_word_length = min_word_length;
    pc.lowercase = lowercase;
    pc.strip_emails = strip_emails;
    pc.strip_urls = strip_urls;
    pc.letters_only = letters_only;
    pc.stem = stem;
    return pc;
}

SweepConfig RunConfig::sweep_config() const {
    SweepConfig sc;
    sc.preprocess = preprocess_config();
    sc.min_df_frac = min_df;
    sc.max_df_frac = max_df;
    sc.dims = dims;
    sc.norm_mode = norm;
    sc.metrics = metrics;
    sc.jobs = jobs;
    sc.config_echo = to_text(*this);
    return sc;
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "min_word_length") base.min_word_length = std::stoi(val);
        else if (key == "lowercase") base.lowercase = parse_bool(val, key);
        else if (key == "strip_emails") base.strip_emails = parse_bool(val, key);
        else if (key == "strip_urls") base.strip_urls = parse_bool(val, key);
        else if (key == "letters_only") base.letters_only = parse_bool(val, key);
        else if (key == "stem") base.stem = parse_bool(val, key);
        else if (key == "min_df") base.min_df = std::stod(val);
        else if (key == "max_df") base.max_df = std::stod(val);
        else if (key == "dims") base.dims = parse_dims_list(val);
        else if (key == "norm") base.norm = norm_mode_from_string(val);
        else if (key == "metrics") base.metrics = parse_metrics_list(val);
        else if (key == "seed") base.seed = std::stoull(val);
        else if (key == "jobs") base.jobs = std::stoi(val);
        else throw std::runtime_error("config line " + std::to_string(line_no) +
                                      ": unknown key " + key);
    }
    if (base.min_word_length < 1)
        throw std::runtime_error("config: min_word_length must be >= 1");
    if (!(0.0 <= base.min_df && base.min_df < base.max_df && base.max_df <= 1.0))
        throw std::runtime_error("config: require 0 <= min_df < max_df <= 1");
    return base;
}

RunConfig parse_config_file(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_config_text(text, base);
}

std::string to_text(const RunConfig& c) {
    std::string out;
    auto kv = [&out](const std::string& k, const std::string& v) {
        out += k + " = " + v + "\n";
    };
    kv("min_word_length", std::to_string(c.min_word_length));
    kv("lowercase", c.lowercase ? "true" : "false");
    kv("strip_emails", c.strip_emails ? "true" : "false");
    kv("strip_urls", c.strip_urls ? "true" : "false");
    kv("letters_only", c.letters_only ? "true" : "false");
    kv("stem", c.stem ? "true" : "false");
    kv("min_df", format_double(c.min_df));
    kv("max_df", format_double(c.max_df));
    kv("dims", join<int>(c.dims, +[](int v) { return std::to_string(v); }));
    kv("norm", to_string(c.norm));
    kv("metrics", join<Metric>(c.metrics, +[](Metric m) { return to_string(m); }));
    kv("seed", std::to_string(c.seed));
    kv("jobs", std::to_string(c.jobs));
    return out;
}

}  // namespace docsim
