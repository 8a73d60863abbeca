#include "docsim/persist.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace fs = std::filesystem;

namespace docsim {

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

void save_space(const fs::path& dir, const PersistedSpace& ps) {
    fs::create_directories(dir);
    nlohmann::json j;
    j["terms"] = ps.space.vocab.terms;
    j["df"] = ps.space.vocab.df;
    j["n_docs"] = ps.space.vocab.n_docs;
    j["idf"] = ps.space.idf;
    j["selected"] = ps.space.selected;
    j["norm_mode"] = to_string(ps.norm_mode);
    j["stopword_hash"] = ps.stopword_hash;
    spit(dir / "space.json", j.dump(2) + "\n");
}

PersistedSpace load_space(const fs::path& dir) {
    nlohmann::json j = nlohmann::json::parse(slurp(dir / "space.json"));
    PersistedSpace ps;
    ps.space.vocab.terms = j.at("terms").get<std::vector<std::string>>();
    ps.space.vocab.df = j.at("df").get<std::vector<int>>();
    ps.space.vocab.n_docs = j.at("n_docs").get<int>();
    for (std::size_t i = 0; i < ps.space.vocab.terms.size(); ++i)
        ps.space.vocab.index.emplace(ps.space.vocab.terms[i], static_cast<int>(i));
    ps.space.idf = j.at("idf").get<std::vector<double>>();
    ps.space.selected = j.at("selected").get<std::vector<int>>();
    ps.space.selected_pos.assign(ps.space.vocab.terms.size(), -1);
    for (std::size_t i = 0; i < ps.space.selected.size(); ++i)
        ps.space.selected_pos[static_cast<std::size_t>(ps.space.selected[i])] =
            static_cast<int>(i);
    ps.norm_mode = norm_mode_from_string(j.at("norm_mode").get<std::string>());
    ps.stopword_hash = j.at("stopword_hash").get<std::string>();
    return ps;
}

void save_vectors(const fs::path& dir,
                  const std::vector<std::pair<std::string, FeatureVector>>& vectors) {
    fs::create_directories(dir);
    std::string csv = "doc_id,feature_index,weight\n";
    for (const auto& [id, v] : vectors)
        for (const auto& [idx, w] : v.entries)
            csv += id + "," + std::to_string(idx) + "," + format_weight(w) + "\n";
    spit(dir / "vectors.csv", csv);
}

std::vector<std::pair<std::string, FeatureVector>> load_vectors(const fs::path& dir,
                                                                int dim, NormMode mode) {
    std::istringstream in(slurp(dir / "vectors.csv"));
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::pair<std::string, FeatureVector>> vectors;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw std::runtime_error("vectors.csv: bad line: " + line);
        if (vectors.empty() || vectors.back().first != fields[0]) {
            vectors.emplace_back(fields[0], FeatureVector{dim, {}, mode});
        }
        vectors.back().second.entries.emplace_back(std::stoi(fields[1]),
                                                   std::strtod(fields[2].c_str(), nullptr));
    }
    return vectors;
}

void save_labels(const fs::path& dir,
                 const std::vector<std::pair<std::string, std::string>>& labels) {
    fs::create_directories(dir);
    std::string csv = "case_id,label\n";
    for (const auto& [id, label] : labels) csv += id + "," + label + "\n";
    spit(dir / "labels.csv", csv);
}

std::vector<std::pair<std::string, std::string>> load_labels(const fs::path& dir) {
    std::istringstream in(slurp(dir / "labels.csv"));
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::pair<std::string, std::string>> labels;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 2) throw std::runtime_error("labels.csv: bad line: " + line);
        labels.emplace_back(fields[0], fields[1]);
    }
    return labels;
}

void save_case_base(const fs::path& dir, const PersistedSpace& ps, const CaseBase& base) {
    save_space(dir, ps);
    std::vector<std::pair<std::string, FeatureVector>> vectors;
    std::vector<std::pair<std::string, std::string>> labels;
    for (const auto& c : base.cases) {
        vectors.emplace_back(c.id, c.vector);
        labels.emplace_back(c.id, c.label);
    }
    save_vectors(dir, vectors);
    save_labels(dir, labels);
}

CaseBase load_case_base(const fs::path& dir, const PersistedSpace& ps) {
    auto vectors = load_vectors(dir, ps.space.dim(), ps.norm_mode);
    std::unordered_map<std::string, FeatureVector> vector_of;
    for (auto& [id, v] : vectors) vector_of.emplace(id, std::move(v));

    // labels.csv carries the full case list in insertion order; a case whose
    // vector is all zeros has no vectors.csv rows.
    std::vector<Case> cases;
    for (const auto& [id, label] : load_labels(dir)) {
        auto it = vector_of.find(id);
        FeatureVector v = it != vector_of.end()
                              ? std::move(it->second)
                              : FeatureVector{ps.space.dim(), {}, ps.norm_mode};
        cases.push_back(Case{id, std::move(v), label});
    }
    return make_case_base(std::move(cases), ps.space.dim());
}

}  // namespace docsim
