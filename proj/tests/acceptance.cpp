// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Thresholds are pinned here and nowhere else.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "unimodal/asymptotics.hpp"
#include "unimodal/bijection.hpp"
#include "unimodal/counting.hpp"
#include "unimodal/curves.hpp"
#include "unimodal/experiments.hpp"
#include "unimodal/sampling.hpp"
#include "unimodal/serialization.hpp"
#include "unimodal/stats.hpp"

using namespace unimodal;

namespace {

constexpr double kPi = 3.14159265358979323846;
int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
    std::printf("%s criterion-%02d %s: %s\n", ok ? "PASS" : "FAIL", index, name,
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1. counts equal exhaustive enumeration for all families, n <= 18
void criterion_counts() {
    bool ok = true;
    std::string detail;
    for (long n = 1; n <= 18 && ok; ++n) {
        for (Family f : {Family::Unrestricted, Family::Strong, Family::SemiStrict}) {
            if (count_family(f, n) != BigInt(enumerate_family(f, n).size())) {
                ok = false;
                detail = std::string("mismatch at ") + family_name(f) + " n=" +
                         std::to_string(n);
            }
        }
        if (n <= 18 && count_family(Family::Overpartition, n) !=
                           BigInt(enumerate_overpartitions(n).size())) {
            ok = false;
            detail = "overpartition mismatch at n=" + std::to_string(n);
        }
    }
    ok = ok && count_family(Family::Unrestricted, 4) == 8 &&
         count_family(Family::Overpartition, 3) == 8;
    if (ok) detail = "all families agree with enumeration through n=18; s(4)=8, pbar(3)=8";
    report(1, "oracle-equivalence", ok, detail);
}

// 2. dm/pbar identity and independent generating-function routes, n <= 500
void criterion_identities() {
    const long N = 500;
    auto pbar = gf_coefficients(Family::Overpartition, N);
    auto dm_conv = count_family_upto(Family::SemiStrict, N + 1);
    auto s_conv = count_family_upto(Family::Unrestricted, N);
    auto d_conv = count_family_upto(Family::Strong, N);
    auto s_gf = gf_coefficients(Family::Unrestricted, N);
    auto d_gf = gf_coefficients(Family::Strong, N);
    bool ok = true;
    std::string detail = "dm(n+1)+dm(n)=pbar(n), Wright product and D-sum agree, n<=500";
    for (long n = 0; n <= N && ok; ++n) {
        if (dm_conv[n] + dm_conv[n + 1] != pbar[n]) {
            ok = false;
            detail = "pair identity fails at n=" + std::to_string(n);
        } else if (s_conv[n] != s_gf[n]) {
            ok = false;
            detail = "s(n) route mismatch at n=" + std::to_string(n);
        } else if (d_conv[n] != d_gf[n]) {
            ok = false;
            detail = "d(n) route mismatch at n=" + std::to_string(n);
        }
    }
    report(2, "identity-suite", ok, detail);
}

// 3. bijection round trip and image, n <= 12
void criterion_bijection() {
    bool ok = true;
    std::string detail;
    for (long n = 0; n <= 12 && ok; ++n) {
        auto overs = enumerate_overpartitions(n);
        std::size_t same = 0, plus = 0;
        for (const auto& op : overs) {
            auto [lam, c] = overpartition_to_dm(op);
            const long expected = c == BijectionCase::FromSameSize ? n : n + 1;
            if (lam.size() != expected || !(dm_to_overpartition(lam, c) == op)) {
                ok = false;
                detail = "round trip fails at n=" + std::to_string(n);
                break;
            }
            ++(c == BijectionCase::FromSameSize ? same : plus);
        }
        if (ok && n >= 1 && same != enumerate_family(Family::SemiStrict, n).size())
            ok = false;
        if (ok && plus != enumerate_family(Family::SemiStrict, n + 1).size()) ok = false;
        if (!ok && detail.empty()) detail = "cardinality mismatch at n=" + std::to_string(n);
    }
    if (ok) detail = "element-wise inversion and cardinalities verified through n=12";
    report(3, "bijection", ok, detail);
}

// 4. curve areas and dilog anchors
void criterion_areas() {
    const auto d = curve_area(CurveFamily::Fd);
    const auto s = curve_area(CurveFamily::Fs);
    const auto dm = curve_area(CurveFamily::Fdm);
    const auto p = curve_area(CurveFamily::Fp);
    const auto pbar = curve_area(CurveFamily::Fpbar);
    const double worst = std::max(
        {std::fabs(d.total - 1.0), std::fabs(s.left - 0.5), std::fabs(s.right - 0.5),
         std::fabs(dm.left - 1.0 / 3), std::fabs(dm.right - 2.0 / 3),
         std::fabs(p.total - 1.0), std::fabs(pbar.total - 1.0)});
    const double dilog_err = std::max(std::fabs(dilog(-1.0) + kPi * kPi / 12.0),
                                      std::fabs(dilog(1.0) - kPi * kPi / 6.0));
    const bool ok = worst < 1e-8 && dilog_err < 1e-12;
    report(4, "curve-areas", ok,
           "worst area error " + fmt(worst) + ", dilog error " + fmt(dilog_err));
}

// 5. intersections, symmetrized identity, involution
void criterion_geometry() {
    auto xs = curve_intersections(CurveFamily::Fp, CurveFamily::Fpbar, 1e-4, 3.0);
    bool ok = xs.size() == 2 && std::fabs(xs[0] - 0.1398) < 1e-3 &&
              std::fabs(xs[1] - 1.4088) < 1e-3;
    const double c = kPi / std::sqrt(6.0);
    double worst_sym = 0, worst_inv = 0;
    for (double x = 0.05; x < 1.2; x += 0.05) {
        const double y = curve_eval(CurveFamily::Fp, x);
        worst_sym = std::max(worst_sym,
                             std::fabs(std::exp(-c * x) + std::exp(-c * y) - 1.0));
    }
    for (double x = 0.05; x < 4.0; x += 0.11) {
        worst_inv = std::max(
            worst_inv,
            std::fabs(curve_eval(CurveFamily::Fpbar, curve_eval(CurveFamily::Fpbar, x)) -
                      x));
    }
    ok = ok && worst_sym < 1e-10 && worst_inv < 1e-10;
    std::string detail = xs.size() == 2
                             ? "intersections " + fmt(xs[0]) + ", " + fmt(xs[1]) +
                                   "; identity error " + fmt(worst_sym) +
                                   "; involution error " + fmt(worst_inv)
                             : "expected 2 intersections, found " +
                                   std::to_string(xs.size());
    report(5, "curve-geometry", ok, detail);
}

// 6. saddle ratios approach 1; coefficient bound where exact counts exist
void criterion_saddle(const std::map<Family, std::vector<BigInt>>& exact) {
    bool ok = true;
    std::string detail;
    for (Family f : {Family::Strong, Family::Unrestricted, Family::SemiStrict}) {
        double prev = 0;
        for (long n : {100L, 1000L, 10000L}) {
            const double ratio = saddle_check(f, n).ratio;
            if (ratio <= prev) ok = false;
            prev = ratio;
        }
        if (std::fabs(prev - 1.0) >= 0.05) ok = false;
        if (!ok && detail.empty())
            detail = std::string("ratio trend fails for ") + family_name(f);
        const auto& counts = exact.at(f);
        for (long n = 100; n <= 2000; n += 100) {
            if (log_big(counts[static_cast<std::size_t>(n)]) >
                saddle_check(f, n).log_bound) {
                ok = false;
                detail = std::string("coefficient bound fails for ") + family_name(f) +
                         " at n=" + std::to_string(n);
            }
        }
    }
    if (ok)
        detail = "ratios at n=10^4: d " + fmt(saddle_check(Family::Strong, 10000).ratio) +
                 ", s " + fmt(saddle_check(Family::Unrestricted, 10000).ratio) + ", dm " +
                 fmt(saddle_check(Family::SemiStrict, 10000).ratio) +
                 "; bound holds for n<=2000";
    report(6, "saddle-lemmas", ok, detail);
}

// 7. asymptotic formulas at n = 2000
void criterion_asymptotics(const std::map<Family, std::vector<BigInt>>& exact) {
    const double s_ratio = std::exp(log_big(exact.at(Family::Unrestricted)[2000]) -
                                    asymptotic_count(Family::Unrestricted, 2000).log_value);
    const double dm_ratio = std::exp(log_big(exact.at(Family::SemiStrict)[2000]) -
                                     asymptotic_count(Family::SemiStrict, 2000).log_value);
    const double d_ratio = log_big(exact.at(Family::Strong)[2000]) /
                           asymptotic_count(Family::Strong, 2000).log_value;
    const bool ok = s_ratio > 0.9 && s_ratio < 1.1 && dm_ratio > 0.9 && dm_ratio < 1.1 &&
                    d_ratio > 0.9 && d_ratio < 1.1;
    report(7, "asymptotic-formulas", ok,
           "n=2000 ratios: s " + fmt(s_ratio) + ", dm " + fmt(dm_ratio) + ", log d " +
               fmt(d_ratio));
}

// 8. Romik functions
void criterion_romik() {
    bool ok = true;
    double worst_res = 0;
    double prev_h = 0;
    for (double t = 0.1; t <= 10.0001; t += 0.1) {
        const double a = alpha(t);
        worst_res = std::max(worst_res, std::fabs(a * a - dilog(1.0 - std::exp(-t * a))));
        const double h = H(t);
        if (h <= prev_h) ok = false;
        prev_h = h;
        if (t * t / std::expm1(t * a) >= 1.0) ok = false;
    }
    ok = ok && worst_res < 1e-12 && std::fabs(H(10.0) - kPi * std::sqrt(2.0 / 3.0)) < 1e-3;
    double worst_deriv = 0;
    for (double t : {1.0, 2.0, 4.0}) {
        const double h = 1e-5;
        worst_deriv = std::max(
            worst_deriv, std::fabs((alpha(t + h) - alpha(t - h)) / (2 * h) -
                                   alpha_derivative(t)) /
                             std::fabs(alpha_derivative(t)));
        worst_deriv = std::max(worst_deriv,
                               std::fabs((H(t + h) - H(t - h)) / (2 * h) - H_derivative(t)) /
                                   std::fabs(H_derivative(t)));
    }
    ok = ok && worst_deriv < 1e-4;
    report(8, "romik-functions", ok,
           "residual " + fmt(worst_res) + ", derivative error " + fmt(worst_deriv) +
               ", H(10) gap " + fmt(std::fabs(H(10.0) - kPi * std::sqrt(2.0 / 3.0))));
}

// 9. sampler uniformity and determinism
void criterion_uniformity() {
    bool ok = true;
    double min_p = 1.0;
    std::string detail;
    for (Family f : {Family::Unrestricted, Family::Strong, Family::SemiStrict,
                     Family::Overpartition}) {
        for (long n : {6L, 8L, 10L}) {
            std::map<std::string, long> freq;
            if (f == Family::Overpartition)
                for (const auto& op : enumerate_overpartitions(n)) freq[to_json_line(op)] = 0;
            else
                for (const auto& seq : enumerate_family(f, n)) freq[to_json_line(seq)] = 0;
            const long draws = 10 * static_cast<long>(freq.size());
            Sampler sampler({f, n, 42, SamplingMode::Exact});
            for (long i = 0; i < draws; ++i) {
                const std::string key = f == Family::Overpartition
                                            ? to_json_line(sampler.next_overpartition())
                                            : to_json_line(sampler.next());
                auto it = freq.find(key);
                if (it == freq.end()) {
                    ok = false;
                    detail = "sample outside the support: " + key;
                } else {
                    ++it->second;
                }
            }
            std::vector<long> observed;
            for (const auto& [k, v] : freq) observed.push_back(v);
            const double p = chi_square_uniform_pvalue(observed);
            min_p = std::min(min_p, p);
            if (p <= 0.001) {
                ok = false;
                detail = std::string("p=") + fmt(p) + " for " + family_name(f) + " n=" +
                         std::to_string(n);
            }
        }
    }
    // determinism: two fresh samplers, byte-identical output
    Sampler a({Family::Strong, 50, 7, SamplingMode::Exact});
    Sampler b({Family::Strong, 50, 7, SamplingMode::Exact});
    for (int i = 0; i < 20; ++i) {
        if (to_json_line(a.next()) != to_json_line(b.next())) {
            ok = false;
            detail = "nondeterministic output";
        }
    }
    if (ok) detail = "min p-value " + fmt(min_p) + " over 12 cells; replay byte-identical";
    report(9, "sampler-uniformity", ok, detail);
}

// 10. 0-1 law at desk scale
void criterion_zero_one() {
    bool ok = true;
    std::string detail;
    std::string fractions;
    for (Family f : {Family::Strong, Family::Unrestricted, Family::SemiStrict,
                     Family::Overpartition}) {
        ExperimentConfig small{f, 400, 0.25, 400, 1, SamplingMode::Exact};
        ExperimentConfig large{f, 1600, 0.25, 400, 1, SamplingMode::Exact};
        const double f_small = verify_shape(small).containment_fraction;
        const double f_large = verify_shape(large).containment_fraction;
        fractions += std::string(fractions.empty() ? "" : ", ") + family_name(f) + " " +
                     fmt(f_large);
        if (f_large < 0.75) {
            ok = false;
            detail = std::string(family_name(f)) + " fraction " + fmt(f_large) + " < 0.75";
        }
        if (f_large < f_small - 0.05) {
            ok = false;
            detail = std::string(family_name(f)) + " fraction regressed: " + fmt(f_small) +
                     " -> " + fmt(f_large);
        }
    }
    if (ok) detail = "n=1600 fractions: " + fractions;
    report(10, "zero-one-law", ok, detail);
}

// 11. statistical corollaries
void criterion_statistics() {
    bool ok = true;
    std::string detail;

    ExperimentConfig strong{Family::Strong, 1600, 0.25, 400, 2, SamplingMode::Exact};
    const double parts_mean = run_stats(strong, Statistic::Parts).normalized.mean;
    if (std::fabs(parts_mean - 1.0808) > 0.1) {
        ok = false;
        detail = "parts mean " + fmt(parts_mean);
    }

    ExperimentConfig over{Family::Overpartition, 1600, 0.25, 400, 2, SamplingMode::Exact};
    const double mw_mean = run_stats(over, Statistic::MarkedWeight).normalized.mean;
    if (std::fabs(mw_mean - 1.0 / 3) > 0.05) {
        ok = false;
        detail = "marked weight mean " + fmt(mw_mean);
    }

    ExperimentConfig semi{Family::SemiStrict, 1600, 0.25, 400, 2, SamplingMode::Exact};
    const double rank_mean = run_stats(semi, Statistic::Rank).normalized.mean;
    if (rank_mean < 0.6 || rank_mean > 1.4) {
        ok = false;
        detail = "rank mean " + fmt(rank_mean);
    }

    for (Family f : {Family::Strong, Family::Unrestricted, Family::SemiStrict}) {
        double prev = 0;
        for (long n : {400L, 900L, 1600L}) {
            ExperimentConfig cfg{f, n, 0.25, 400, 2, SamplingMode::Exact};
            const double med = run_stats(cfg, Statistic::Peak).normalized.median;
            if (med <= prev) {
                ok = false;
                detail = std::string("peak median not increasing for ") + family_name(f);
            }
            prev = med;
        }
    }

    if (ok)
        detail = "parts/sqrt(n) " + fmt(parts_mean) + ", marked weight/n " + fmt(mw_mean) +
                 ", rank scale " + fmt(rank_mean) + ", peak medians increasing";
    report(11, "statistical-corollaries", ok, detail);
}

} // namespace

int main() {
    criterion_counts();
    criterion_identities();
    criterion_bijection();
    criterion_areas();
    criterion_geometry();

    std::map<Family, std::vector<BigInt>> exact;
    for (Family f : {Family::Strong, Family::Unrestricted, Family::SemiStrict})
        exact.emplace(f, gf_coefficients(f, 2000));
    criterion_saddle(exact);
    criterion_asymptotics(exact);

    criterion_romik();
    criterion_uniformity();
    criterion_zero_one();
    criterion_statistics();

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
