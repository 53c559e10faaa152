#pragma once

#include <cstddef>
#include <span>

namespace bfree {

/// Upper-tail probability of a chi-square statistic with `dof` degrees of freedom.
double chi_square_survival(double statistic, double dof);

/// Pearson statistic over paired observed counts and expected counts.
double pearson_statistic(std::span<const double> observed, std::span<const double> expected);

/// Standard error of a Bernoulli(p) frequency estimated from n trials.
double binomial_sigma(double p, std::size_t n);

}  // namespace bfree
