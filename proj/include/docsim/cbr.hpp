#ifndef DOCSIM_CBR_HPP
#define DOCSIM_CBR_HPP

#include <string>
#include <vector>

#include "docsim/metrics.hpp"

namespace docsim {

struct Case {
    std::string id;
    FeatureVector vector;
    std::string label;
};

/// Value type: readers share it freely, add_case returns a new base.
struct CaseBase {
    std::vector<Case> cases;
    int dim = 0;

    std::size_t size() const { return cases.size(); }
};

CaseBase make_case_base(std::vector<Case> cases, int dim);

struct RetrievalResult {
    std::string case_id;
    std::string label;
    double score = 0.0;
    MetricKind metric;
};

/// Exhaustive scan over all cases (exactly n metric evaluations, no index).
/// Exact ties break to the smallest insertion position.
RetrievalResult retrieve_nearest(const FeatureVector& query, const CaseBase& base,
                                 Metric metric);

std::string classify(const FeatureVector& query, const CaseBase& base, Metric metric);

/// Appends the case last; duplicate id or dimension mismatch throws.
CaseBase add_case(const CaseBase& base, const std::string& id, FeatureVector vector,
                  const std::string& label);

/// OpenMP-parallel batch classification over independent queries. jobs <= 0
/// uses the OpenMP default; jobs == 1 is the serial path. Output order and
/// content are identical for every jobs value.
std::vector<std::string> classify_batch(const std::vector<FeatureVector>& queries,
                                        const CaseBase& base, Metric metric,
                                        int jobs = 0);

}  // namespace docsim

#endif
