#include "unimodal/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unimodal/errors.hpp"

namespace unimodal {

namespace {

// Lower regularized gamma by series, for x < s + 1.
double gamma_p_series(double s, double x) {
    double sum = 1.0 / s, term = sum;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (s + k);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Upper regularized gamma by Lentz continued fraction, for x >= s + 1.
double gamma_q_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

} // namespace

double gamma_q(double s, double x) {
    if (s <= 0 || x < 0) throw ValidationError("gamma_q requires s > 0, x >= 0");
    if (x == 0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return gamma_q_cf(s, x);
}

double chi_square_uniform_pvalue(const std::vector<long>& observed) {
    if (observed.size() < 2) throw ValidationError("need at least two cells");
    const long total = std::accumulate(observed.begin(), observed.end(), 0L);
    if (total <= 0) throw ValidationError("observations must be positive");
    const double expected = static_cast<double>(total) / observed.size();
    double stat = 0.0;
    for (long obs : observed) {
        const double d = obs - expected;
        stat += d * d / expected;
    }
    const double df = static_cast<double>(observed.size()) - 1.0;
    return gamma_q(df / 2.0, stat / 2.0);
}

Summary summarize(std::vector<double> values) {
    if (values.empty()) throw ValidationError("cannot summarize an empty sample");
    Summary s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    const std::size_t n = values.size();
    s.median = (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    return s;
}

} // namespace unimodal
