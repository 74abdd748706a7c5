#include "unimodal/asymptotics.hpp"

#include <cmath>

#include "unimodal/curves.hpp"

namespace unimodal {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long kTermBudget = 10'000'000;
constexpr double kLogCutoff = 70.0; // e^{-70} < 1e-30

// Streaming log-sum-exp over a unimodal sequence of log terms.
class LogSumExp {
public:
    void add(double log_term) {
        if (log_term > max_) {
            sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
            max_ = log_term;
        } else {
            sum_ += std::exp(log_term - max_);
        }
    }
    bool negligible(double log_term) const {
        return max_ > -1e300 && log_term < max_ - kLogCutoff;
    }
    double log() const { return max_ + std::log(sum_); }

private:
    double max_ = -1e308;
    double sum_ = 0.0;
};

// log of prod_{j>=1} (1-q^j)^{-1} at q = e^{-t}.
double log_partition_product(double t) {
    double sum = 0.0;
    for (long j = 1; j <= kTermBudget; ++j) {
        if (j * t > kLogCutoff) return sum;
        sum -= std::log1p(-std::exp(-j * t));
    }
    throw ResourceError("partition product did not converge within the term budget");
}

// log of prod_{j>=1} (1+q^j).
double log_distinct_product(double t) {
    double sum = 0.0;
    for (long j = 1; j <= kTermBudget; ++j) {
        if (j * t > kLogCutoff) return sum;
        sum += std::log1p(std::exp(-j * t));
    }
    throw ResourceError("distinct product did not converge within the term budget");
}

// L(q) = sum_{m>=1} (-1)^{m+1} q^{m(m+1)/2}; the value lies in (0, 1).
double log_false_theta(double t) {
    double sum = 0.0;
    for (long m = 1; m <= kTermBudget; ++m) {
        const double tri = 0.5 * static_cast<double>(m) * (m + 1);
        const double term = std::exp(-tri * t);
        if (term < 1e-30 * (sum + 1e-300) && m > 1) break;
        sum += (m % 2 == 1) ? term : -term;
    }
    return std::log(sum);
}

// log of sum_{m} q^{m+1} prod_{j<=m} (1+q^j)^2.
double log_strong_sum(double t) {
    LogSumExp acc;
    double log_prod = 0.0; // 2 sum_{j<=m} log(1+e^{-jt})
    for (long m = 0; m <= kTermBudget; ++m) {
        if (m >= 1) log_prod += 2.0 * std::log1p(std::exp(-m * t));
        const double log_term = -(m + 1) * t + log_prod;
        if (m > 1 && acc.negligible(log_term)) return acc.log();
        acc.add(log_term);
    }
    throw ResourceError("D(q) did not converge within the term budget");
}

// log of sum_{m>=1} q^m prod_{j<m} (1+q^j)/(1-q^j).
double log_semistrict_sum(double t) {
    LogSumExp acc;
    double log_prod = 0.0;
    for (long m = 1; m <= kTermBudget; ++m) {
        if (m >= 2)
            log_prod += std::log1p(std::exp(-(m - 1) * t)) -
                        std::log1p(-std::exp(-(m - 1) * t));
        const double log_term = -m * t + log_prod;
        if (m > 2 && acc.negligible(log_term)) return acc.log();
        acc.add(log_term);
    }
    throw ResourceError("Dm(q) did not converge within the term budget");
}

} // namespace

double log_gf(Series series, double t) {
    if (!(t > 0)) throw ValidationError("log_gf requires t > 0");
    switch (series) {
        case Series::D: return log_strong_sum(t);
        case Series::S: return 2.0 * log_partition_product(t) + log_false_theta(t);
        case Series::Dm: return log_semistrict_sum(t);
        case Series::L: return log_false_theta(t);
        case Series::OverProduct:
            return log_distinct_product(t) + log_partition_product(t);
    }
    throw ValidationError("unknown series");
}

SaddleSpec saddle_spec(Family family) {
    switch (family) {
        case Family::Strong:
            return {family, kPi / std::sqrt(6.0), kPi * kPi / 6.0, 2.0 * kPi / std::sqrt(6.0)};
        case Family::Unrestricted:
            return {family, kPi / std::sqrt(3.0), kPi * kPi / 3.0, 2.0 * kPi / std::sqrt(3.0)};
        case Family::SemiStrict:
            return {family, kPi / 2.0, kPi * kPi / 4.0, kPi};
        case Family::Overpartition:
            break;
    }
    throw ValidationError("saddle analysis covers the unimodal families");
}

SaddleCheck saddle_check(Family family, long n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    const SaddleSpec spec = saddle_spec(family);
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double t = spec.c / sqrt_n;
    Series series = family == Family::Strong    ? Series::D
                    : family == Family::Unrestricted ? Series::S
                                                     : Series::Dm;
    SaddleCheck check;
    check.t = t;
    check.log_bound = spec.c * sqrt_n + log_gf(series, t);
    check.ratio = check.log_bound / (spec.growth * sqrt_n);
    return check;
}

double log_big(const BigInt& value) {
    if (value <= 0) throw ValidationError("log of a nonpositive count");
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double alpha(double t) {
    if (t < 0) throw ValidationError("alpha requires t >= 0");
    if (t == 0) return 0.0;
    const double limit = kPi / std::sqrt(6.0);
    // g(a) = Li2(1 - e^{-ta}) - a^2 is positive near 0 and negative at the
    // limit, with a single crossing.
    auto g = [&](double a) { return dilog(1.0 - std::exp(-t * a)) - a * a; };
    double lo = 1e-300, hi = limit;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16 * hi) break;
    }
    const double a = 0.5 * (lo + hi);
    if (std::fabs(g(a)) > 1e-12)
        throw ResourceError("alpha solver failed to reach the residual target");
    return a;
}

double alpha_derivative(double t) {
    const double a = alpha(t);
    return t * a / (2.0 * std::expm1(t * a) - t * t);
}

double H(double t) {
    if (!(t > 0)) throw ValidationError("H requires t > 0");
    const double a = alpha(t);
    return 2.0 * a - t * std::log1p(-std::exp(-t * a));
}

double H_derivative(double t) {
    const double a = alpha(t);
    return -std::log1p(-std::exp(-t * a));
}

AsymptoticCount asymptotic_count(Family family, long n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    const double nn = static_cast<double>(n);
    AsymptoticCount out;
    switch (family) {
        case Family::Unrestricted:
            out.log_value = 2.0 * kPi * std::sqrt(nn / 3.0) -
                            std::log(8.0 * std::pow(3.0, 0.75)) - 1.25 * std::log(nn);
            out.has_prefactor = true;
            return out;
        case Family::SemiStrict:
            out.log_value = kPi * std::sqrt(nn) - std::log(16.0 * nn);
            out.has_prefactor = true;
            return out;
        case Family::Strong:
            out.log_value = 2.0 * kPi * std::sqrt(nn / 6.0);
            out.has_prefactor = false;
            return out;
        case Family::Overpartition:
            break;
    }
    throw ValidationError("no asymptotic formula for this family here");
}

} // namespace unimodal
