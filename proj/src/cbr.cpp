#include "docsim/cbr.hpp"

#include <stdexcept>
#include <unordered_set>

namespace docsim {

CaseBase make_case_base(std::vector<Case> cases, int dim) {
    std::unordered_set<std::string> ids;
    for (const auto& c : cases) {
        if (c.vector.dim != dim)
            throw std::runtime_error("case base: vector dimension mismatch for id " + c.id);
        if (!ids.insert(c.id).second)
            throw std::runtime_error("case base: duplicate id " + c.id);
    }
    return CaseBase{std::move(cases), dim};
}

RetrievalResult retrieve_nearest(const FeatureVector& query, const CaseBase& base,
                                 Metric metric) {
    if (base.cases.empty()) throw std::runtime_error("retrieve_nearest: empty case base");
    if (query.dim != base.dim)
        throw std::runtime_error("retrieve_nearest: query dimension mismatch");

    const MetricKind kind = metric_kind(metric);
    const bool lower = kind.direction == Direction::LowerIsCloser;
    std::size_t best = 0;
    double best_score = score(metric, query, base.cases[0].vector);
    for (std::size_t i = 1; i < base.cases.size(); ++i) {
        const double s = score(metric, query, base.cases[i].vector);
        // strict comparison: ties keep the earliest insertion position
        if (lower ? s < best_score : s > best_score) {
            best = i;
            best_score = s;
        }
    }
    const Case& c = base.cases[best];
    return RetrievalResult{c.id, c.label, best_score, kind};
}

std::string classify(const FeatureVector& query, const CaseBase& base, Metric metric) {
    return retrieve_nearest(query, base, metric).label;
}

CaseBase add_case(const CaseBase& base, const std::string& id, FeatureVector vector,
                  const std::string& label) {
    if (vector.dim != base.dim)
        throw std::runtime_error("add_case: vector dimension mismatch");
    for (const auto& c : base.cases)
        if (c.id == id) throw std::runtime_error("add_case: duplicate id " + id);
    CaseBase next = base;
    next.cases.push_back(Case{id, std::move(vector), label});
    return next;
}

std::vector<std::string> classify_batch(const std::vector<FeatureVector>& queries,
                                        const CaseBase& base, Metric metric, int jobs) {
    std::vector<std::string> labels(queries.size());
    const auto n = static_cast<long>(queries.size());
    if (jobs > 0) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
        for (long i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(i)] =
                classify(queries[static_cast<std::size_t>(i)], base, metric);
    } else {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(i)] =
                classify(queries[static_cast<std::size_t>(i)], base, metric);
    }
    return labels;
}

}  // namespace docsim
