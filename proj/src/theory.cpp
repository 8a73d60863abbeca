#include "docsim/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace docsim {

double median_nn_distance(int m, long n) {
    if (m < 1) throw std::runtime_error("median_nn_distance: M must be >= 1");
    if (n < 1) throw std::runtime_error("median_nn_distance: N must be >= 1");
    // 1 - (1/2)^(1/N) computed via expm1 so large N keeps precision.
    const double inner = -std::expm1(std::log(0.5) / static_cast<double>(n));
    return std::pow(inner, 1.0 / static_cast<double>(m));
}

double required_points(double d, int m) {
    if (!(d > 0.0 && d < 1.0)) throw std::runtime_error("required_points: d must be in (0,1)");
    if (m < 1) throw std::runtime_error("required_points: M must be >= 1");
    // ln(1/2) / ln(1 - d^M); log1p keeps the tiny-d^M regime accurate.
    return std::log(0.5) / std::log1p(-std::pow(d, m));
}

}  // namespace docsim
