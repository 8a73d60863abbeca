#include "docsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace docsim {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_dims(const FeatureVector& x, const FeatureVector& y) {
    if (x.dim != y.dim)
        throw std::runtime_error("metric: dimension mismatch (" + std::to_string(x.dim) +
                                 " vs " + std::to_string(y.dim) + ")");
}

}  // namespace

MetricKind metric_kind(Metric m) {
    switch (m) {
        case Metric::Euclidean: return {m, Direction::LowerIsCloser};
        case Metric::Cosine: return {m, Direction::HigherIsCloser};
        case Metric::TsSs: return {m, Direction::LowerIsCloser};
    }
    return {m, Direction::LowerIsCloser};
}

std::string to_string(Metric m) {
    switch (m) {
        case Metric::Euclidean: return "ed";
        case Metric::Cosine: return "cs";
        case Metric::TsSs: return "tsss";
    }
    return "?";
}

Metric metric_from_string(const std::string& s) {
    if (s == "ed") return Metric::Euclidean;
    if (s == "cs") return Metric::Cosine;
    if (s == "tsss") return Metric::TsSs;
    throw std::runtime_error("unknown metric: " + s + " (expected ed|cs|tsss)");
}

double l2_norm(const FeatureVector& x) {
    double s = 0.0;
    for (const auto& [_, w] : x.entries) s += w * w;
    return std::sqrt(s);
}

// Iterates the shorter entry list; the products and index-ordered sum make
// dot(x,y) == dot(y,x) bit-exact.
double dot(const FeatureVector& x, const FeatureVector& y) {
    const FeatureVector& a = x.entries.size() <= y.entries.size() ? x : y;
    const FeatureVector& b = x.entries.size() <= y.entries.size() ? y : x;
    double s = 0.0;
    auto it = b.entries.begin();
    for (const auto& [idx, w] : a.entries) {
        while (it != b.entries.end() && it->first < idx) ++it;
        if (it == b.entries.end()) break;
        if (it->first == idx) s += w * it->second;
    }
    return s;
}

double euclidean(const FeatureVector& x, const FeatureVector& y) {
    check_dims(x, y);
    // Merge over the union of indices; (a-b)^2 and (b-a)^2 are bit-identical.
    double s = 0.0;
    auto ix = x.entries.begin();
    auto iy = y.entries.begin();
    while (ix != x.entries.end() || iy != y.entries.end()) {
        double d;
        if (iy == y.entries.end() || (ix != x.entries.end() && ix->first < iy->first)) {
            d = ix->second;
            ++ix;
        } else if (ix == x.entries.end() || iy->first < ix->first) {
            d = iy->second;
            ++iy;
        } else {
            d = ix->second - iy->second;
            ++ix;
            ++iy;
        }
        s += d * d;
    }
    return std::sqrt(s);
}

double cosine(const FeatureVector& x, const FeatureVector& y) {
    check_dims(x, y);
    const double nx = l2_norm(x);
    const double ny = l2_norm(y);
    if (nx == 0.0 || ny == 0.0) return 0.0;
    const double c = dot(x, y) / (nx * ny);
    return std::clamp(c, -1.0, 1.0);
}

double theta_prime(const FeatureVector& x, const FeatureVector& y) {
    return std::acos(cosine(x, y)) / kDegToRad + 10.0;
}

double triangle_area(const FeatureVector& x, const FeatureVector& y) {
    const double theta = theta_prime(x, y);
    return l2_norm(x) * l2_norm(y) * std::sin(theta * kDegToRad) / 2.0;
}

double sector_area(const FeatureVector& x, const FeatureVector& y) {
    const double theta = theta_prime(x, y);
    const double radius = euclidean(x, y) + std::abs(l2_norm(x) - l2_norm(y));
    return std::numbers::pi * radius * radius * theta / 360.0;
}

double ts_ss(const FeatureVector& x, const FeatureVector& y) {
    return triangle_area(x, y) * sector_area(x, y);
}

double score(Metric m, const FeatureVector& x, const FeatureVector& y) {
    switch (m) {
        case Metric::Euclidean: return euclidean(x, y);
        case Metric::Cosine: return cosine(x, y);
        case Metric::TsSs: return ts_ss(x, y);
    }
    return 0.0;
}

}  // namespace docsim
