#pragma once

// Scalar Riccati machinery of the geodesic-flow stable/unstable splitting on
// surfaces: the invariant solutions of L' + L^2 + K(t) = 0, the constant
// curvature tangent propagator, and the conormal transversality predicate.

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortholink {

struct BlowUp : std::runtime_error {
    explicit BlowUp(const std::string& what) : std::runtime_error(what) {}
};
struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct RiccatiSolution {
    enum class Kind { Unstable, Stable };
    std::vector<double> grid;    // sample times, uniform spacing dt
    std::vector<double> values;  // L(t) samples
    Kind kind = Kind::Unstable;
    double dt = 0.0;
};

// The unstable solution on [t0, t1] for curvature K(t) <= -kappa0 < 0,
// identified by forward integration from t0 - burn_in with burn_in chosen so
// the exponential attraction squeezes any initial value below 1e-9 of the
// invariant solution.  Throws BlowUp when the integration escapes (K not
// uniformly negative).
RiccatiSolution riccati_unstable(const std::function<double(double)>& K, double t0, double t1,
                                 double dt = 1e-3);

// The stable solution, identified by backward integration from t1 + burn_in.
RiccatiSolution riccati_stable(const std::function<double(double)>& K, double t0, double t1,
                               double dt = 1e-3);

// Tangent map of the geodesic flow in the (e1, e3) frame for K = -1:
// [[cosh t, sinh t], [sinh t, cosh t]].
std::array<std::array<double, 2>, 2> jacobi_propagator_const(double t);

struct TransversalityResult {
    bool transversal = false;
    double margin = 0.0;  // min over samples of |kappa - Lu|
};

// Conormal transversality of a curve with geodesic-curvature samples kappa
// against the unstable Riccati samples Lu: holds iff the two never meet.
// For closed geodesics kappa is identically 0 and positivity of Lu makes the
// predicate automatic.
TransversalityResult conormal_transversality(std::span<const double> kappa,
                                             std::span<const double> Lu);

}  // namespace ortholink
