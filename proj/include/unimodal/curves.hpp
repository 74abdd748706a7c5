#pragma once

#include <vector>

#include "unimodal/geometry.hpp"
#include "unimodal/sequences.hpp"

namespace unimodal {

// The five limit curves. Fd/Fs/Fdm are the two-branch unimodal shapes,
// Fp the partition curve and Fpbar the overpartition curve (x > 0 only).
enum class CurveFamily { Fd, Fs, Fdm, Fp, Fpbar };

enum class Branch { Left, Right };

const char* curve_name(CurveFamily curve);
CurveFamily curve_from_name(const std::string& name);

// The curve a sequence family concentrates on.
CurveFamily curve_for_family(Family family);

// The family constant c: pi/sqrt(6) for Fd and Fp, pi/sqrt(3) for Fs,
// pi/2 for Fdm and Fpbar.
double curve_constant(CurveFamily curve);

// Support endpoints. Left support is -log(2)/c for Fd and Fdm, -inf for Fs,
// 0 for Fp/Fpbar; right support is log(2)/c for Fd, +inf otherwise.
double support_min(CurveFamily curve);
double support_max(CurveFamily curve);

// Closed-form value. Throws DomainError outside the support or at the x = 0
// pole of Fs/Fdm/Fp/Fpbar (and of Fd, whose value diverges there).
double curve_eval(CurveFamily curve, double x);

// Branch inverse: the x on the given branch with curve_eval(x) = y.
// For the single-branch curves Fp and Fpbar both branch tags are accepted.
// Throws DomainError when y is outside the branch's range.
double curve_inverse(CurveFamily curve, Branch branch, double y);

// Real dilogarithm Li_2(z) for z <= 1, to >= 12 significant digits
// (power series for |z| <= 1/2, functional equations elsewhere).
double dilog(double z);

struct CurveAreas {
    double left = 0;  // area of the x < 0 piece (0 for Fp/Fpbar)
    double right = 0; // area of the x > 0 piece
    double total = 0;
};

// Areas by tanh-sinh quadrature (improper tails truncated below 1e-14).
CurveAreas curve_area(CurveFamily curve);

struct NeighborhoodSpec {
    double epsilon = 0.25; // > 0
};

struct VertexDiagnostic {
    double x = 0, y = 0;
    double offset = 0; // min of |x|, |y| and the horizontal distance to the curve
};

struct ContainmentResult {
    bool contained = false;
    double worst_offset = 0;
    VertexDiagnostic worst_vertex;
};

// N_epsilon containment: every vertex must lie within the epsilon strip of an
// axis or within horizontal distance epsilon of some branch of the curve.
ContainmentResult in_neighborhood(const VertexSet& vertices, CurveFamily curve,
                                  const NeighborhoodSpec& spec);

// Crossings of two curves found by sign scanning plus bisection on [lo, hi].
std::vector<double> curve_intersections(CurveFamily a, CurveFamily b, double lo,
                                        double hi, double step = 1e-3);

namespace detail {
// Tanh-sinh quadrature on (a, b); integrand may blow up at the endpoints.
double integrate(double (*f)(double, const void*), const void* ctx, double a, double b,
                 double tol = 1e-12);
} // namespace detail

} // namespace unimodal
