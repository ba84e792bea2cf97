#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "uflab/lattice.hpp"
#include "uflab/noise.hpp"
#include "uflab/peeler.hpp"

namespace uflab {

struct WilsonInterval {
    double estimate;
    double lower;
    double upper;
    double z;
};

// Wilson score interval for a binomial proportion; z = 2 gives the ~95%
// bands used throughout.
WilsonInterval wilson_interval(int64_t successes, int64_t trials, double z);

struct FitResult {
    double a = 0.0;  // A in y = A - B/d, or the slope of a line
    double b = 0.0;  // B in y = A - B/d, or the intercept of a line
    double r2 = 0.0;
    double intercept_stderr = 0.0;
};

// Least-squares fit of y = A - B/d over (d, y) points; needs >= 3 distinct d.
FitResult fit_hyperbolic(const std::vector<std::pair<double, double>>& points);

// Least-squares line y = a*x + b; needs >= 2 distinct x.
FitResult fit_linear(const std::vector<std::pair<double, double>>& points);

// Least squares of y = a*x^2 + c*x + b. FitResult::a is the quadratic
// coefficient and FitResult::b the intercept; r2 and intercept_stderr refer
// to the full three-parameter model. Needs >= 4 points.
FitResult fit_quadratic(const std::vector<std::pair<double, double>>& points);

// True iff the residual (errors XOR correction) crosses a logical cut an odd
// number of times: either axis on the torus, the boundary-to-boundary axis on
// the planar code. Requires an exactly-corrected syndrome.
bool logical_failure(const Lattice& lat, const ErrorSample& errors, const Correction& correction);

// Interpolated p values where two failure-rate curves cross, given a common
// ascending p grid.
std::vector<double> curve_crossings(const std::vector<double>& ps,
                                    const std::vector<double>& rates_low_d,
                                    const std::vector<double>& rates_high_d);

}  // namespace uflab
