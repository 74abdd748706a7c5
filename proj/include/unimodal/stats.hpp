#pragma once

#include <vector>

namespace unimodal {

// Upper regularized incomplete gamma Q(s, x) (series / continued fraction).
double gamma_q(double s, double x);

// Chi-square goodness of fit against equal cell probabilities.
// Returns the p-value Q(df/2, stat/2) with df = cells - 1.
double chi_square_uniform_pvalue(const std::vector<long>& observed);

struct Summary {
    double mean = 0;
    double stddev = 0; // sample standard deviation
    double median = 0;
    double min = 0;
    double max = 0;
};

Summary summarize(std::vector<double> values);

} // namespace unimodal
