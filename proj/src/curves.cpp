#include "unimodal/curves.hpp"

#include <cmath>
#include <limits>

namespace unimodal {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kCd = kPi / std::sqrt(6.0);
const double kCs = kPi / std::sqrt(3.0);
const double kCdm = kPi / 2.0;
const double kLog2 = std::log(2.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

const char* curve_name(CurveFamily curve) {
    switch (curve) {
        case CurveFamily::Fd: return "f_d";
        case CurveFamily::Fs: return "f_s";
        case CurveFamily::Fdm: return "f_dm";
        case CurveFamily::Fp: return "f_p";
        case CurveFamily::Fpbar: return "f_pbar";
    }
    return "?";
}

CurveFamily curve_from_name(const std::string& name) {
    if (name == "f_d" || name == "fd") return CurveFamily::Fd;
    if (name == "f_s" || name == "fs") return CurveFamily::Fs;
    if (name == "f_dm" || name == "fdm") return CurveFamily::Fdm;
    if (name == "f_p" || name == "fp") return CurveFamily::Fp;
    if (name == "f_pbar" || name == "fpbar") return CurveFamily::Fpbar;
    throw ValidationError("unknown curve: " + name);
}

CurveFamily curve_for_family(Family family) {
    switch (family) {
        case Family::Strong: return CurveFamily::Fd;
        case Family::Unrestricted: return CurveFamily::Fs;
        case Family::SemiStrict: return CurveFamily::Fdm;
        case Family::Overpartition: return CurveFamily::Fpbar;
    }
    throw ValidationError("unknown family");
}

double curve_constant(CurveFamily curve) {
    switch (curve) {
        case CurveFamily::Fd:
        case CurveFamily::Fp: return kCd;
        case CurveFamily::Fs: return kCs;
        case CurveFamily::Fdm:
        case CurveFamily::Fpbar: return kCdm;
    }
    throw ValidationError("unknown curve");
}

double support_min(CurveFamily curve) {
    switch (curve) {
        case CurveFamily::Fd: return -kLog2 / kCd;
        case CurveFamily::Fs: return -kInf;
        case CurveFamily::Fdm: return -kLog2 / kCdm;
        case CurveFamily::Fp:
        case CurveFamily::Fpbar: return 0.0;
    }
    throw ValidationError("unknown curve");
}

double support_max(CurveFamily curve) {
    return curve == CurveFamily::Fd ? kLog2 / kCd : kInf;
}

double curve_eval(CurveFamily curve, double x) {
    const double c = curve_constant(curve);
    if (x == 0.0 && curve != CurveFamily::Fd)
        throw DomainError("pole at x = 0");
    switch (curve) {
        case CurveFamily::Fd: {
            const double w = kLog2 / c;
            if (x < -w || x > w || x == 0.0)
                throw DomainError("x outside the support of f_d");
            return -std::log(std::expm1(c * std::fabs(x))) / c;
        }
        case CurveFamily::Fs:
            return -std::log(-std::expm1(-c * std::fabs(x))) / c;
        case CurveFamily::Fdm:
            if (x < 0) {
                if (x < -kLog2 / c) throw DomainError("x outside the support of f_dm");
                return -std::log(std::expm1(-c * x)) / c;
            }
            return -std::log(-std::expm1(-c * x)) / c;
        case CurveFamily::Fp:
            if (x < 0) throw DomainError("f_p is defined for x > 0");
            return -std::log(-std::expm1(-c * x)) / c;
        case CurveFamily::Fpbar:
            if (x < 0) throw DomainError("f_pbar is defined for x > 0");
            return (std::log1p(std::exp(-c * x)) - std::log(-std::expm1(-c * x))) / c;
    }
    throw ValidationError("unknown curve");
}

double curve_inverse(CurveFamily curve, Branch branch, double y) {
    const double c = curve_constant(curve);
    switch (curve) {
        case CurveFamily::Fd:
            if (y < 0) throw DomainError("f_d branches have range [0, inf)");
            // e^{-c|x|} = 1 + e^{-cy}
            return (branch == Branch::Left ? -1.0 : 1.0) *
                   std::log1p(std::exp(-c * y)) / c;
        case CurveFamily::Fs:
            if (y <= 0) throw DomainError("f_s branches have range (0, inf)");
            return (branch == Branch::Left ? 1.0 : -1.0) *
                   std::log1p(-std::exp(-c * y)) / c;
        case CurveFamily::Fdm:
            if (branch == Branch::Left) {
                if (y < 0) throw DomainError("the left branch of f_dm has range [0, inf)");
                return -std::log1p(std::exp(-c * y)) / c;
            }
            if (y <= 0) throw DomainError("the right branch of f_dm has range (0, inf)");
            return -std::log1p(-std::exp(-c * y)) / c;
        case CurveFamily::Fp:
            if (y <= 0) throw DomainError("f_p has range (0, inf)");
            return -std::log1p(-std::exp(-c * y)) / c;
        case CurveFamily::Fpbar:
            // Symmetric in x and y: the inverse is the curve itself.
            if (y <= 0) throw DomainError("f_pbar has range (0, inf)");
            return curve_eval(CurveFamily::Fpbar, y);
    }
    throw ValidationError("unknown curve");
}

double dilog(double z) {
    if (z > 1.0) throw DomainError("dilog requires z <= 1");
    if (z == 1.0) return kPi * kPi / 6.0;
    if (z < -1.0) {
        // Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
        const double l = std::log(-z);
        return -kPi * kPi / 6.0 - 0.5 * l * l - dilog(1.0 / z);
    }
    if (z < -0.5) {
        // Landen: Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2
        const double l = std::log1p(-z);
        return -dilog(z / (z - 1.0)) - 0.5 * l * l;
    }
    if (z > 0.5) {
        // Li2(z) = pi^2/6 - log(z)log(1-z) - Li2(1-z)
        return kPi * kPi / 6.0 - std::log(z) * std::log1p(-z) - dilog(1.0 - z);
    }
    // |z| <= 1/2: power series
    double term = z, sum = 0.0;
    for (int n = 1; n < 80; ++n) {
        const double add = term / (static_cast<double>(n) * n);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum) + 1e-300) break;
        term *= z;
    }
    return sum;
}

namespace detail {

// Tanh-sinh quadrature; nodes cluster doubly-exponentially at the endpoints,
// so integrable endpoint singularities converge without special casing.
double integrate(double (*f)(double, const void*), const void* ctx, double a, double b,
                 double tol) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double tmax = 4.0;

    auto node_sum = [&](double h, bool odd_only) {
        double sum = 0.0;
        for (double t = odd_only ? h : 0.0; t <= tmax; t += odd_only ? 2 * h : h) {
            const double u = 0.5 * kPi * std::sinh(t);
            const double g = std::tanh(u);
            const double w = 0.5 * kPi * std::cosh(t) / std::pow(std::cosh(u), 2);
            // Distance to the endpoint, computed stably.
            const double r = 1.0 / (std::exp(2.0 * u) * 0.5 + 0.5); // 1 - tanh(u)
            if (t == 0.0) {
                sum += w * f(mid, ctx);
            } else {
                const double xp = b - half * r;
                const double xm = a + half * r;
                if (xp > a && xp < b) sum += w * f(xp, ctx);
                if (xm > a && xm < b) sum += w * f(xm, ctx);
            }
            (void)g;
            if (w * half < 1e-300) break;
        }
        return sum;
    };

    double h = 1.0;
    double total = node_sum(h, false);
    double result = total * h * half;
    for (int level = 0; level < 12; ++level) {
        h *= 0.5;
        total += node_sum(h, true);
        const double next = total * h * half;
        if (level > 2 && std::fabs(next - result) < tol * (std::fabs(next) + 1.0)) {
            return next;
        }
        result = next;
    }
    return result;
}

} // namespace detail

namespace {

struct CurvePiece {
    CurveFamily curve;
};

double eval_cb(double x, const void* ctx) {
    const auto* piece = static_cast<const CurvePiece*>(ctx);
    return curve_eval(piece->curve, x);
}

double piece_area(CurveFamily curve, double lo, double hi) {
    CurvePiece piece{curve};
    return detail::integrate(&eval_cb, &piece, lo, hi);
}

// Truncation point beyond which the tail integral is below 1e-14.
double tail_cutoff(CurveFamily curve) {
    return 40.0 / curve_constant(curve);
}

} // namespace

CurveAreas curve_area(CurveFamily curve) {
    CurveAreas areas;
    switch (curve) {
        case CurveFamily::Fd:
            areas.left = piece_area(curve, support_min(curve), 0.0);
            areas.right = piece_area(curve, 0.0, support_max(curve));
            break;
        case CurveFamily::Fs:
            areas.right = piece_area(curve, 0.0, tail_cutoff(curve));
            areas.left = piece_area(curve, -tail_cutoff(curve), 0.0);
            break;
        case CurveFamily::Fdm:
            areas.left = piece_area(curve, support_min(curve), 0.0);
            areas.right = piece_area(curve, 0.0, tail_cutoff(curve));
            break;
        case CurveFamily::Fp:
        case CurveFamily::Fpbar:
            areas.right = piece_area(curve, 0.0, tail_cutoff(curve));
            break;
    }
    areas.total = areas.left + areas.right;
    return areas;
}

namespace {

// Branches carrying positive-y points of the curve.
std::vector<Branch> branches_of(CurveFamily curve) {
    switch (curve) {
        case CurveFamily::Fd:
        case CurveFamily::Fs:
        case CurveFamily::Fdm: return {Branch::Left, Branch::Right};
        case CurveFamily::Fp:
        case CurveFamily::Fpbar: return {Branch::Right};
    }
    return {};
}

double horizontal_distance(CurveFamily curve, double x, double y) {
    double best = kInf;
    for (Branch b : branches_of(curve)) {
        try {
            best = std::min(best, std::fabs(x - curve_inverse(curve, b, y)));
        } catch (const DomainError&) {
            // y outside this branch's range; the axis strips absorb such points.
        }
    }
    return best;
}

} // namespace

ContainmentResult in_neighborhood(const VertexSet& vertices, CurveFamily curve,
                                  const NeighborhoodSpec& spec) {
    if (spec.epsilon <= 0) throw ValidationError("epsilon must be positive");
    ContainmentResult result;
    result.contained = true;
    const double scale = vertices.scale();
    for (const GridPoint& gp : vertices.all()) {
        const double x = static_cast<double>(gp.x) * scale;
        const double y = static_cast<double>(gp.y) * scale;
        const double offset =
            std::min({std::fabs(x), std::fabs(y), horizontal_distance(curve, x, y)});
        if (offset > result.worst_offset) {
            result.worst_offset = offset;
            result.worst_vertex = {x, y, offset};
        }
    }
    result.contained = result.worst_offset <= spec.epsilon;
    return result;
}

std::vector<double> curve_intersections(CurveFamily a, CurveFamily b, double lo,
                                        double hi, double step) {
    auto diff = [&](double x) { return curve_eval(a, x) - curve_eval(b, x); };
    std::vector<double> roots;
    double prev_x = lo;
    double prev = diff(lo);
    for (double x = lo + step; x <= hi + step * 0.5; x += step) {
        const double cur = diff(x);
        if ((prev < 0) != (cur < 0)) {
            double l = prev_x, r = x;
            for (int i = 0; i < 80; ++i) {
                const double m = 0.5 * (l + r);
                if ((diff(m) < 0) == (prev < 0))
                    l = m;
                else
                    r = m;
            }
            roots.push_back(0.5 * (l + r));
        }
        prev_x = x;
        prev = cur;
    }
    return roots;
}

} // namespace unimodal
