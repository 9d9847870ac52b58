#pragma once

// Evaluation of the generalized Poincare series over a finite length
// spectrum, Margulis growth fitting, tail completion, and the polynomial
// extrapolation estimating the analytically continued value at s = 0.

#include "ortholink/census.hpp"

#include <complex>
#include <iosfwd>

namespace ortholink {

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};
struct PoleProximity : std::runtime_error {
    explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};
struct UnstableExtrapolation : std::runtime_error {
    explicit UnstableExtrapolation(const std::string& what) : std::runtime_error(what) {}
};

std::complex<double> partial_series(const LengthSpectrum& S, std::complex<double> s);
double partial_series(const LengthSpectrum& S, double s);

struct GrowthFit {
    double h = 0.0;          // exponential rate (entropy)
    double amplitude = 0.0;  // A in N(T) ~ A e^{hT}
    double max_residual = 0.0;
};

// least squares of log N(T) = log A + h T over the jump abscissae inside
// [T1, T2]; at least 30 jumps required
GrowthFit fit_growth(const StepFunction& N, double T1, double T2);

// partial series plus the fitted Margulis tail A e^{(h-s) t_max} / (s - h);
// |s - h| < 0.05 is rejected as too close to the pole
double tail_completed_series(const LengthSpectrum& S, double s, double A, double h);

struct SeriesEstimate {
    double value = 0.0;
    double uncertainty = 0.0;
    std::string method;  // "entire" or "pole_subtracted"
    double t_max_used = 0.0;
};

// Estimate of the continued value at s = 0: fit a polynomial to
// F(s) = (s - h) * tail_completed_series on a real grid right of the pole,
// extrapolate F(0) and divide by -h.  A = 0 marks an entire series (finite
// sum), where the continuation is the sum itself.
SeriesEstimate continue_at_zero(const LengthSpectrum& S, double A, double h);

// diagnostics table rows `s,partial,completed,F` over the estimator grid
void write_series_diagnostics(const LengthSpectrum& S, double A, double h, std::ostream& out);

}  // namespace ortholink
