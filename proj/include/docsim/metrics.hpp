#ifndef DOCSIM_METRICS_HPP
#define DOCSIM_METRICS_HPP

#include <string>

#include "docsim/features.hpp"

namespace docsim {

enum class Metric { Euclidean, Cosine, TsSs };
enum class Direction { LowerIsCloser, HigherIsCloser };

struct MetricKind {
    Metric kind;
    Direction direction;
};

MetricKind metric_kind(Metric m);
std::string to_string(Metric m);
Metric metric_from_string(const std::string& s);  // "ed" | "cs" | "tsss"

double l2_norm(const FeatureVector& x);
double dot(const FeatureVector& x, const FeatureVector& y);

/// l2 distance over the dense interpretation of the sparse vectors.
double euclidean(const FeatureVector& x, const FeatureVector& y);

/// dot/(|x||y|) clamped to [-1,1]; 0 if either vector is zero.
double cosine(const FeatureVector& x, const FeatureVector& y);

/// arccos of the clamped cosine, in degrees, plus 10. Range [10, 190].
double theta_prime(const FeatureVector& x, const FeatureVector& y);

/// |x||y| sin(theta') / 2, theta' converted to radians for the sine.
double triangle_area(const FeatureVector& x, const FeatureVector& y);

/// pi (ED + ||x|-|y||)^2 theta'/360, theta' in degrees.
double sector_area(const FeatureVector& x, const FeatureVector& y);

/// triangle_area * sector_area; 0 for identical vectors, lower is closer.
double ts_ss(const FeatureVector& x, const FeatureVector& y);

double score(Metric m, const FeatureVector& x, const FeatureVector& y);

}  // namespace docsim

#endif
