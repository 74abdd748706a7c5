#pragma once

#include "unimodal/counting.hpp"
#include "unimodal/sequences.hpp"

namespace unimodal {

// Generating functions evaluated on the real axis at q = e^{-t}.
enum class Series { D, S, Dm, L, OverProduct };

// log F(e^{-t}), accumulated in log scale (values overflow doubles for small
// t). Truncated when the next term contributes < 1e-30 relatively; throws
// ResourceError if that takes more than 10^7 terms.
double log_gf(Series series, double t);

struct SaddleSpec {
    Family family;
    double c;      // saddle constant: pi/sqrt(6), pi/sqrt(3), pi/2
    double kappa;  // log F(e^{-t}) ~ kappa / t
    double growth; // A = 2c: log count ~ A sqrt(n)
};

SaddleSpec saddle_spec(Family family); // unimodal families only

struct SaddleCheck {
    double t = 0;         // c / sqrt(n)
    double log_bound = 0; // log(q^{-n} F(q))
    double ratio = 0;     // log_bound / (A sqrt(n))
};

SaddleCheck saddle_check(Family family, long n);

// Natural log of an exact count (for the coefficient bound
// log(count) <= log(q^{-n} F(q))).
double log_big(const BigInt& value);

// Romik's implicit function: the unique a in [0, pi/sqrt(6)) with
// a^2 = Li2(1 - e^{-t a}), solved by bisection to residual < 1e-12.
double alpha(double t);

// Closed-form derivative t*alpha / (2(e^{t alpha} - 1) - t^2).
double alpha_derivative(double t);

// H(t) = 2 alpha(t) - t log(1 - e^{-t alpha(t)}), the growth exponent of
// partitions with parts <= t sqrt(n).
double H(double t);

// Closed-form derivative -log(1 - e^{-t alpha(t)}).
double H_derivative(double t);

struct AsymptoticCount {
    double log_value = 0;      // natural log of the asymptotic formula
    bool has_prefactor = false; // false for Strong: only the leading exponent
};

// s(n) ~ e^{2 pi sqrt(n/3)} / (2^3 3^{3/4} n^{5/4});
// dm(n) ~ e^{pi sqrt(n)} / (16 n);  d(n): log d(n) ~ 2 pi sqrt(n/6).
AsymptoticCount asymptotic_count(Family family, long n);

} // namespace unimodal
