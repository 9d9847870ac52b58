#include "ortholink/riccati.hpp"

#include <algorithm>
#include <cmath>

namespace ortholink {

namespace {

constexpr double kEscape = 1e8;

double rk4_step(const std::function<double(double)>& K, double t, double L, double h) {
    auto f = [&](double tt, double LL) { return -LL * LL - K(tt); };
    double k1 = f(t, L);
    double k2 = f(t + 0.5 * h, L + 0.5 * h * k1);
    double k3 = f(t + 0.5 * h, L + 0.5 * h * k2);
    double k4 = f(t + h, L + h * k3);
    return L + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// kappa0 with -sup K over [lo, hi]; iterate once the burn-in window is known
double estimate_kappa0(const std::function<double(double)>& K, double lo, double hi, double dt) {
    double sup = -std::numeric_limits<double>::infinity();
    int n = std::max(16, static_cast<int>(std::ceil((hi - lo) / std::max(dt, 1e-6))));
    for (int i = 0; i <= n; ++i) sup = std::max(sup, K(lo + (hi - lo) * i / n));
    return -sup;
}

RiccatiSolution integrate(const std::function<double(double)>& K, double t0, double t1, double dt,
                          RiccatiSolution::Kind kind) {
    if (!(t1 >= t0)) throw std::invalid_argument("riccati: empty time span");
    if (!(dt > 0.0) || dt > 1e-3 * (1.0 + 1e-12))
        throw std::invalid_argument("riccati: dt must lie in (0, 1e-3]");

    bool unstable = (kind == RiccatiSolution::Kind::Unstable);
    double kappa0 = estimate_kappa0(K, t0, t1, (t1 - t0) / 64.0);
    double burn = 1.0;
    for (int pass = 0; pass < 5; ++pass) {
        if (!(kappa0 > 0.0)) throw BlowUp("riccati: curvature is not uniformly negative");
        burn = 20.0 / std::sqrt(kappa0);
        double lo = unstable ? t0 - burn : t0;
        double hi = unstable ? t1 : t1 + burn;
        double k = estimate_kappa0(K, lo, hi, (hi - lo) / 256.0);
        if (k >= kappa0 - 1e-12) break;
        kappa0 = k;
    }

    std::size_t span_steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt));
    std::size_t burn_steps = static_cast<std::size_t>(std::ceil(burn / dt));

    RiccatiSolution sol;
    sol.kind = kind;
    sol.dt = dt;
    sol.grid.reserve(span_steps + 1);
    sol.values.reserve(span_steps + 1);

    if (unstable) {
        double t = t0 - static_cast<double>(burn_steps) * dt;
        double L = std::sqrt(kappa0);
        for (std::size_t i = 0; i < burn_steps + span_steps + 1; ++i) {
            if (!std::isfinite(L) || std::abs(L) > kEscape)
                throw BlowUp("riccati: unstable integration escaped");
            if (i >= burn_steps) {
                sol.grid.push_back(t0 + static_cast<double>(i - burn_steps) * dt);
                sol.values.push_back(L);
            }
            L = rk4_step(K, t, L, dt);
            t += dt;
        }
    } else {
        double t = t1 + static_cast<double>(burn_steps) * dt;
        double L = -std::sqrt(kappa0);
        for (std::size_t i = 0; i < burn_steps + span_steps + 1; ++i) {
            if (!std::isfinite(L) || std::abs(L) > kEscape)
                throw BlowUp("riccati: stable integration escaped");
            if (i >= burn_steps) {
                sol.grid.push_back(t1 - static_cast<double>(i - burn_steps) * dt);
                sol.values.push_back(L);
            }
            L = rk4_step(K, t, L, -dt);
            t -= dt;
        }
        std::reverse(sol.grid.begin(), sol.grid.end());
        std::reverse(sol.values.begin(), sol.values.end());
    }
    return sol;
}

}  // namespace

RiccatiSolution riccati_unstable(const std::function<double(double)>& K, double t0, double t1,
                                 double dt) {
    return integrate(K, t0, t1, dt, RiccatiSolution::Kind::Unstable);
}

RiccatiSolution riccati_stable(const std::function<double(double)>& K, double t0, double t1,
                               double dt) {
    return integrate(K, t0, t1, dt, RiccatiSolution::Kind::Stable);
}

std::array<std::array<double, 2>, 2> jacobi_propagator_const(double t) {
    double ch = std::cosh(t), sh = std::sinh(t);
    return {{{ch, sh}, {sh, ch}}};
}

TransversalityResult conormal_transversality(std::span<const double> kappa,
                                             std::span<const double> Lu) {
    if (kappa.size() != Lu.size())
        throw LengthMismatch("conormal_transversality: sample arrays differ in length");
    if (kappa.empty()) throw std::invalid_argument("conormal_transversality: empty samples");
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kappa.size(); ++i)
        margin = std::min(margin, std::abs(kappa[i] - Lu[i]));
    return {margin > 0.0, margin};
}

}  // namespace ortholink
