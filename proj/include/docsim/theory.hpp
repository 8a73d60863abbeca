#ifndef DOCSIM_THEORY_HPP
#define DOCSIM_THEORY_HPP

namespace docsim {

/// Median distance from the origin to the nearest of N points uniform in the
/// M-dimensional unit ball: (1 - (1/2)^(1/N))^(1/M). Result in (0,1).
double median_nn_distance(int m, long n);

/// Points needed so the median nearest-neighbor distance is d in dimension M:
/// log_{1-d^M}(1/2) = ln(1/2) / ln(1 - d^M), returned unrounded.
/// Uses log1p for the tiny-d^M regime.
double required_points(double d, int m);

}  // namespace docsim

#endif
