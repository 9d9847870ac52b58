#include "ortholink/halfplane.hpp"

#include <algorithm>
#include <cmath>

namespace ortholink {

namespace {

double safe_acosh(double t) { return std::acosh(std::max(t, 1.0)); }

Vec2 hyp_unit(Vec2 v, double y) {
    // scale Euclidean components so the hyperbolic norm is 1
    double en = std::hypot(v.x, v.y);
    return {v.x / en * y, v.y / en * y};
}

}  // namespace

// ---------------------------------------------------------------- IdealPoint

void IdealPoint::normalize() {
    double n = std::hypot(p_, q_);
    if (n == 0.0) throw std::invalid_argument("ideal point (0:0)");
    p_ /= n;
    q_ /= n;
    if (q_ < 0.0 || (q_ == 0.0 && p_ < 0.0)) {
        p_ = -p_;
        q_ = -q_;
    }
    if (std::abs(q_) < 1e-15) {  // snap exact infinity
        p_ = 1.0;
        q_ = 0.0;
    }
}

IdealPoint IdealPoint::finite(double t) {
    IdealPoint r;
    r.p_ = t;
    r.q_ = 1.0;
    r.normalize();
    return r;
}

IdealPoint IdealPoint::infinity() { return IdealPoint(); }

IdealPoint IdealPoint::projective(double p, double q) {
    IdealPoint r;
    r.p_ = p;
    r.q_ = q;
    r.normalize();
    return r;
}

double IdealPoint::value() const {
    if (is_infinity()) throw std::domain_error("ideal point at infinity has no finite value");
    return p_ / q_;
}

double IdealPoint::angle() const {
    double a = std::atan2(q_, p_);  // in [0, pi] since q_ >= 0
    if (a >= M_PI - 1e-15) a = 0.0; // (−1:0) ~ (1:0)
    return a;
}

bool IdealPoint::approx_equal(const IdealPoint& other, double tol) const {
    return std::abs(p_ * other.q_ - q_ * other.p_) <= tol;
}

// ------------------------------------------------------------------ Isometry

Isometry::Isometry(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    double det = a_ * d_ - b_ * c_;
    if (!(det > 0.0))
        throw std::invalid_argument("isometry matrix must have positive determinant");
    double s = 1.0 / std::sqrt(det);
    a_ *= s; b_ *= s; c_ *= s; d_ *= s;
    const double entries[4] = {a_, b_, c_, d_};
    for (double e : entries) {
        if (std::abs(e) > kMatTol) {
            if (e < 0.0) { a_ = -a_; b_ = -b_; c_ = -c_; d_ = -d_; }
            break;
        }
    }
}

Isometry Isometry::inverse() const { return Isometry(d_, -b_, -c_, a_); }

Isometry Isometry::raw(double a, double b, double c, double d) {
    Isometry g;
    g.a_ = a;
    g.b_ = b;
    g.c_ = c;
    g.d_ = d;
    return g;
}

Isometry Isometry::adjugate() const {
    double e[4] = {d_, -b_, -c_, a_};
    for (double v : e) {
        if (std::abs(v) > kMatTol) {
            if (v < 0.0)
                for (double& x : e) x = -x;
            break;
        }
    }
    return raw(e[0], e[1], e[2], e[3]);
}

Isometry Isometry::operator*(const Isometry& rhs) const {
    return Isometry(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                    c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

HPoint Isometry::operator()(const HPoint& z) const {
    double den = (c_ * z.x + d_) * (c_ * z.x + d_) + (c_ * z.y) * (c_ * z.y);
    double nx = (a_ * z.x + b_) * (c_ * z.x + d_) + a_ * c_ * z.y * z.y;
    return {nx / den, z.y / den};
}

IdealPoint Isometry::operator()(const IdealPoint& t) const {
    return IdealPoint::projective(a_ * t.p() + b_ * t.q(), c_ * t.p() + d_ * t.q());
}

Vec2 Isometry::push_tangent(const HPoint& z, const Vec2& v) const {
    // derivative of the Mobius map as a complex number 1/(cz+d)^2
    double re = c_ * z.x + d_, im = c_ * z.y;
    double den = (re * re + im * im);
    double dr = (re * re - im * im) / (den * den);
    double di = -2.0 * re * im / (den * den);
    return {dr * v.x - di * v.y, di * v.x + dr * v.y};
}

double Isometry::max_abs_entry_diff(const Isometry& other) const {
    return std::max({std::abs(a_ - other.a_), std::abs(b_ - other.b_),
                     std::abs(c_ - other.c_), std::abs(d_ - other.d_)});
}

HPoint mobius_apply(const Isometry& g, const HPoint& z) { return g(z); }

double dist(const HPoint& p, const HPoint& q) {
    double dx = p.x - q.x, dy = p.y - q.y;
    return safe_acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

// -------------------------------------------------------------- GeodesicLine

GeodesicLine::GeodesicLine(IdealPoint m, IdealPoint p) : p_minus(m), p_plus(p) {
    if (p_minus.approx_equal(p_plus))
        throw std::invalid_argument("geodesic endpoints coincide");
}

bool GeodesicLine::is_vertical(double tol) const {
    return p_minus.is_infinity(tol) || p_plus.is_infinity(tol);
}

double GeodesicLine::abscissa() const {
    return p_minus.is_infinity() ? p_plus.value() : p_minus.value();
}

double GeodesicLine::center() const { return 0.5 * (p_minus.value() + p_plus.value()); }

double GeodesicLine::radius() const { return 0.5 * std::abs(p_plus.value() - p_minus.value()); }

bool GeodesicLine::contains(const HPoint& z, double tol) const {
    if (is_vertical()) return std::abs(z.x - abscissa()) <= tol;
    double m = center(), r = radius();
    return std::abs(std::hypot(z.x - m, z.y) - r) <= tol * std::max(1.0, r);
}

Vec2 GeodesicLine::tangent_at(const HPoint& z) const {
    if (is_vertical()) {
        double s = p_plus.is_infinity() ? 1.0 : -1.0;  // toward infinity iff p_plus = inf
        return {0.0, s * z.y};
    }
    double u = p_minus.value(), v = p_plus.value(), m = center();
    // tangent (y, m - x) runs from u toward v when v > u
    Vec2 t{z.y, m - z.x};
    if (v < u) { t.x = -t.x; t.y = -t.y; }
    return hyp_unit(t, z.y);
}

double GeodesicLine::arclength_coord(const HPoint& z) const {
    if (is_vertical()) {
        double s = p_plus.is_infinity() ? 1.0 : -1.0;
        return s * std::log(z.y);
    }
    double u = p_minus.value(), v = p_plus.value(), m = center();
    double theta = std::atan2(z.y, z.x - m);
    // arclength along the semicircle is log tan(theta/2), increasing with theta;
    // travel from u to v decreases theta when v > u
    double s = std::log(std::tan(0.5 * theta));
    return (v > u) ? -s : s;
}

HPoint GeodesicLine::point_at(double coord) const {
    if (is_vertical()) {
        double s = p_plus.is_infinity() ? 1.0 : -1.0;
        return {abscissa(), std::exp(s * coord)};
    }
    double u = p_minus.value(), v = p_plus.value(), m = center(), r = radius();
    double s = (v > u) ? -coord : coord;
    double theta = 2.0 * std::atan(std::exp(s));
    return {m + r * std::cos(theta), r * std::sin(theta)};
}

bool GeodesicLine::same_unoriented(const GeodesicLine& other, double tol) const {
    return (p_minus.approx_equal(other.p_minus, tol) && p_plus.approx_equal(other.p_plus, tol)) ||
           (p_minus.approx_equal(other.p_plus, tol) && p_plus.approx_equal(other.p_minus, tol));
}

GeodesicLine GeodesicLine::apply(const Isometry& g) const {
    return GeodesicLine(g(p_minus), g(p_plus));
}

// ---------------------------------------------------------------- operations

GeodesicLine axis(const Isometry& g) {
    double tr = g.trace();
    if (std::abs(tr) <= 2.0 + kMatTol)
        throw NotHyperbolic("axis: |trace| <= 2");
    double s = std::sqrt(tr * tr - 4.0);
    double l1 = 0.5 * (tr + s), l2 = 0.5 * (tr - s);
    auto fixed_point = [&](double lam) {
        // eigenvector (b, lam - a) or (lam - d, c); pick the better conditioned
        double n1 = std::abs(g.b()) + std::abs(lam - g.a());
        double n2 = std::abs(lam - g.d()) + std::abs(g.c());
        if (n1 >= n2) return IdealPoint::projective(g.b(), lam - g.a());
        return IdealPoint::projective(lam - g.d(), g.c());
    };
    bool l1_attracting = std::abs(l1) > std::abs(l2);
    IdealPoint attracting = fixed_point(l1_attracting ? l1 : l2);
    IdealPoint repelling = fixed_point(l1_attracting ? l2 : l1);
    return GeodesicLine(repelling, attracting);
}

double translation_length(const Isometry& g) {
    double tr = std::abs(g.trace());
    if (tr <= 2.0 + kMatTol) throw NotHyperbolic("translation_length: |trace| <= 2");
    return 2.0 * safe_acosh(0.5 * tr);
}

namespace {

// intersection in the upper half-plane of circles centered on the real axis
HPoint circle_circle_point(double u, double rho, double m, double r) {
    double x = (rho * rho - r * r + m * m - u * u) / (2.0 * (m - u));
    double y2 = rho * rho - (x - u) * (x - u);
    return {x, std::sqrt(std::max(y2, 0.0))};
}

Vec2 toward(const GeodesicLine& carrier, const HPoint& from, const HPoint& to) {
    // unit tangent of `carrier` at `from` pointing toward `to`
    Vec2 t = carrier.tangent_at(from);
    double s = carrier.arclength_coord(to) - carrier.arclength_coord(from);
    if (s < 0) { t.x = -t.x; t.y = -t.y; }
    return t;
}

}  // namespace

namespace {

// total order on unoriented lines so that swapped arguments reuse the exact
// same arithmetic (the symmetry contract is bit-exact)
bool line_key_less(const GeodesicLine& A, const GeodesicLine& B) {
    int va = A.is_vertical() ? 0 : 1, vb = B.is_vertical() ? 0 : 1;
    if (va != vb) return va < vb;
    double ca = va == 0 ? A.abscissa() : A.center();
    double cb = vb == 0 ? B.abscissa() : B.center();
    if (ca != cb) return ca < cb;
    double ra = va == 0 ? 0.0 : A.radius();
    double rb = vb == 0 ? 0.0 : B.radius();
    return ra < rb;
}

}  // namespace

std::optional<PerpSegment> common_perpendicular(const GeodesicLine& L1, const GeodesicLine& L2) {
    if (L1.same_unoriented(L2)) throw IdenticalLines("common_perpendicular: identical lines");
    // shared ideal endpoint: asymptotic, no positive-length perpendicular
    for (const IdealPoint* e1 : {&L1.p_minus, &L1.p_plus})
        for (const IdealPoint* e2 : {&L2.p_minus, &L2.p_plus})
            if (e1->approx_equal(*e2)) return std::nullopt;

    if (line_key_less(L2, L1)) {
        auto swapped = common_perpendicular(L2, L1);
        if (!swapped) return std::nullopt;
        PerpSegment seg;
        seg.length = swapped->length;
        seg.foot1 = swapped->foot2;
        seg.foot2 = swapped->foot1;
        seg.dir1 = {-swapped->dir2.x, -swapped->dir2.y};
        seg.dir2 = {-swapped->dir1.x, -swapped->dir1.y};
        return seg;
    }

    bool v1 = L1.is_vertical(), v2 = L2.is_vertical();
    GeodesicLine perp = L1;  // placeholder, assigned below
    HPoint f1, f2;

    if (v1 && v2) return std::nullopt;  // both through infinity (handled above, kept for safety)

    if (v1 || v2) {
        const GeodesicLine& V = v1 ? L1 : L2;
        const GeodesicLine& C = v1 ? L2 : L1;
        double u = V.abscissa(), m = C.center(), r = C.radius();
        double rho2 = (u - m) * (u - m) - r * r;
        if (rho2 <= kGeomTol * std::max(1.0, r * r)) return std::nullopt;  // they intersect
        double rho = std::sqrt(rho2);
        HPoint fv{u, rho};
        HPoint fc = circle_circle_point(u, rho, m, r);
        f1 = v1 ? fv : fc;
        f2 = v1 ? fc : fv;
        perp = GeodesicLine(IdealPoint::finite(u - rho), IdealPoint::finite(u + rho));
    } else {
        double m1 = L1.center(), r1 = L1.radius();
        double m2 = L2.center(), r2 = L2.radius();
        double dm = m2 - m1;
        if (std::abs(dm) <= kGeomTol * std::max(1.0, std::max(r1, r2))) {
            // concentric: perpendicular is the vertical line through the center
            f1 = {m1, r1};
            f2 = {m2, r2};
            perp = GeodesicLine(IdealPoint::finite(m1), IdealPoint::infinity());
        } else {
            double sep = std::abs(dm);
            if (sep < r1 + r2 - kGeomTol && sep > std::abs(r1 - r2) + kGeomTol)
                return std::nullopt;  // crossing in the upper half-plane
            double p = (m2 * m2 - r2 * r2 - m1 * m1 + r1 * r1) / (2.0 * dm);
            double rho2 = (p - m1) * (p - m1) - r1 * r1;
            if (rho2 <= kGeomTol) return std::nullopt;  // tangency at the boundary
            double rho = std::sqrt(rho2);
            f1 = circle_circle_point(p, rho, m1, r1);
            f2 = circle_circle_point(p, rho, m2, r2);
            perp = GeodesicLine(IdealPoint::finite(p - rho), IdealPoint::finite(p + rho));
        }
    }

    PerpSegment seg;
    seg.length = dist(f1, f2);
    if (seg.length <= kGeomTol) return std::nullopt;
    seg.foot1 = f1;
    seg.foot2 = f2;
    seg.dir1 = toward(perp, f1, f2);
    Vec2 back = toward(perp, f2, f1);
    seg.dir2 = {-back.x, -back.y};
    return seg;
}

PointLineResult point_to_line(const HPoint& p, const GeodesicLine& L) {
    PointLineResult res;
    if (L.is_vertical()) {
        double u = L.abscissa();
        double rho = std::hypot(p.x - u, p.y);
        res.distance = std::asinh(std::abs(p.x - u) / p.y);
        res.foot = {u, rho};
        if (res.distance < 1e-12) {
            res.dir_defined = false;
            res.foot = p;
            res.distance = 0.0;
            return res;
        }
        // connecting geodesic is the circle |z - u| = rho; tangent at the foot
        // is horizontal, toward p
        double s = (p.x > u) ? 1.0 : -1.0;
        res.dir_at_foot = {s * rho, 0.0};
        return res;
    }
    // conjugate the carrying semicircle to the imaginary axis
    double u = L.p_minus.value(), v = L.p_plus.value();
    if (u > v) std::swap(u, v);
    Isometry M(1.0, -u, -1.0, v);  // z -> (z-u)/(v-z), det v-u > 0
    HPoint pp = M(p);
    GeodesicLine axis_line(IdealPoint::finite(0.0), IdealPoint::infinity());
    PointLineResult inner = point_to_line(pp, axis_line);
    res.distance = inner.distance;
    Isometry Mi = M.inverse();
    res.foot = Mi(inner.foot);
    res.dir_defined = inner.dir_defined;
    if (res.dir_defined)
        res.dir_at_foot = Mi.push_tangent(inner.foot, inner.dir_at_foot);
    else
        res.foot = p;
    return res;
}

int side_sign(const GeodesicLine& L, const HPoint& base, const Vec2& v) {
    double vn = std::hypot(v.x, v.y);
    if (vn < 1e-12) throw DegenerateTangent("side_sign: zero tangent");
    Vec2 t = L.tangent_at(base);
    double tn = std::hypot(t.x, t.y);
    double dot = (v.x * t.x + v.y * t.y) / (vn * tn);
    // guard against misuse; stays permissive for feet on near-degenerate
    // translated axes whose tangents carry relative error ~ 1e-10 / radius
    if (std::abs(dot) > 1e-3)
        throw std::invalid_argument("side_sign: tangent not orthogonal to the line");
    double det = v.x * t.y - v.y * t.x;
    return det > 0.0 ? +1 : -1;
}

}  // namespace ortholink
