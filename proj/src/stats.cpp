#include "bfree/stats.hpp"

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "bfree/error.hpp"

namespace bfree {

double chi_square_survival(double statistic, double dof) {
    if (statistic <= 0) return 1.0;
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

double pearson_statistic(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size()) fail("LengthMismatch", "observed/expected size mismatch");
    double stat = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0) continue;
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

double binomial_sigma(double p, std::size_t n) {
    return std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace bfree
