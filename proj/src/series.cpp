#include "ortholink/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace ortholink {

namespace {

constexpr int kGridPoints = 20;
constexpr double kGridLo = 0.1;  // offsets from the fitted pole
constexpr double kGridHi = 1.0;

// least-squares polynomial fit on scaled abscissae, evaluated at one point
double polyfit_eval(const std::vector<double>& xs, const std::vector<double>& ys, int degree,
                    double x_eval) {
    int n = degree + 1;
    double mid = 0.5 * (xs.front() + xs.back());
    double half = 0.5 * (xs.back() - xs.front());
    auto scale = [&](double x) { return (x - mid) / half; };

    std::vector<long double> ata(static_cast<std::size_t>(n) * n, 0.0L), atb(n, 0.0L);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        long double t = scale(xs[k]);
        std::vector<long double> pow(n, 1.0L);
        for (int i = 1; i < n; ++i) pow[i] = pow[i - 1] * t;
        for (int i = 0; i < n; ++i) {
            atb[i] += pow[i] * static_cast<long double>(ys[k]);
            for (int j = 0; j < n; ++j) ata[i * n + j] += pow[i] * pow[j];
        }
    }
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(static_cast<double>(ata[r * n + col])) >
                std::abs(static_cast<double>(ata[piv * n + col])))
                piv = r;
        for (int j = 0; j < n; ++j) std::swap(ata[col * n + j], ata[piv * n + j]);
        std::swap(atb[col], atb[piv]);
        for (int r = col + 1; r < n; ++r) {
            long double f = ata[r * n + col] / ata[col * n + col];
            for (int j = col; j < n; ++j) ata[r * n + j] -= f * ata[col * n + j];
            atb[r] -= f * atb[col];
        }
    }
    std::vector<long double> coef(n);
    for (int i = n - 1; i >= 0; --i) {
        long double s = atb[i];
        for (int j = i + 1; j < n; ++j) s -= ata[i * n + j] * coef[j];
        coef[i] = s / ata[i * n + i];
    }
    long double t = scale(x_eval), acc = 0.0L, p = 1.0L;
    for (int i = 0; i < n; ++i) {
        acc += coef[i] * p;
        p *= t;
    }
    return static_cast<double>(acc);
}

std::vector<double> grid_points(double h, double shift) {
    std::vector<double> xs(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i)
        xs[i] = h + kGridLo + shift + (kGridHi - kGridLo) * i / (kGridPoints - 1);
    return xs;
}

double extrapolated_value(const LengthSpectrum& S, double A, double h, double shift, int degree) {
    std::vector<double> xs = grid_points(h, shift), Fs(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i)
        Fs[i] = (xs[i] - h) * tail_completed_series(S, xs[i], A, h);
    double F0 = polyfit_eval(xs, Fs, degree, 0.0);
    return -F0 / h;
}

}  // namespace

std::complex<double> partial_series(const LengthSpectrum& S, std::complex<double> s) {
    std::complex<double> sum = 0.0;
    for (const ArcRecord& r : S.records) sum += std::exp(-s * r.length);
    return sum;
}

double partial_series(const LengthSpectrum& S, double s) {
    double sum = 0.0;
    for (const ArcRecord& r : S.records) sum += std::exp(-s * r.length);
    return sum;
}

GrowthFit fit_growth(const StepFunction& N, double T1, double T2) {
    std::vector<std::pair<double, double>> pts;  // (T, log N(T))
    for (const auto& [t, n] : N.jumps)
        if (t >= T1 && t <= T2 && n > 0) pts.emplace_back(t, std::log(static_cast<double>(n)));
    if (pts.size() < 30)
        throw InsufficientData("fit_growth: fewer than 30 jump points in the window");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(pts.size());
    GrowthFit fit;
    fit.h = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - fit.h * sx) / n;
    fit.amplitude = std::exp(intercept);
    for (const auto& [x, y] : pts)
        fit.max_residual = std::max(fit.max_residual, std::abs(y - (intercept + fit.h * x)));
    return fit;
}

double tail_completed_series(const LengthSpectrum& S, double s, double A, double h) {
    if (std::abs(s - h) < 0.05)
        throw PoleProximity("tail_completed_series: s within 0.05 of the fitted pole");
    return partial_series(S, s) + A * std::exp((h - s) * S.t_max) / (s - h);
}

SeriesEstimate continue_at_zero(const LengthSpectrum& S, double A, double h) {
    SeriesEstimate est;
    est.t_max_used = S.t_max;
    if (A == 0.0) {
        // no fitted tail: the series is a finite sum, entire in s
        est.value = partial_series(S, 0.0);
        est.uncertainty = 0.0;
        est.method = "entire";
        return est;
    }
    if (h < 0.8 || h > 1.2)
        throw std::invalid_argument("continue_at_zero: fitted rate outside [0.8, 1.2]");

    double v3 = extrapolated_value(S, A, h, 0.0, 3);
    double v4 = extrapolated_value(S, A, h, 0.0, 4);
    double v5 = extrapolated_value(S, A, h, 0.0, 5);
    double deg_spread = std::max({v3, v4, v5}) - std::min({v3, v4, v5});
    if (deg_spread > 1.0)
        throw UnstableExtrapolation("continue_at_zero: degree spread exceeds 1.0");

    double step = (kGridHi - kGridLo) / (kGridPoints - 1);
    double lo = v4, hi = v4;
    for (double shift : {-step, -0.5 * step, 0.5 * step, step}) {
        double v = extrapolated_value(S, A, h, shift, 4);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double grid_spread = hi - lo;

    est.value = v4;
    est.uncertainty = deg_spread + grid_spread;
    est.method = "pole_subtracted";
    return est;
}

void write_series_diagnostics(const LengthSpectrum& S, double A, double h, std::ostream& out) {
    out << "s,partial,completed,F\n";
    char buf[160];
    for (double s : grid_points(h, 0.0)) {
        double part = partial_series(S, s);
        double comp = tail_completed_series(S, s, A, h);
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", s, part, comp, (s - h) * comp);
        out << buf;
    }
}

}  // namespace ortholink
