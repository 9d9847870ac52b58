#pragma once

// Upper half-plane model of the hyperbolic plane: points, ideal boundary,
// PSL(2,R) isometries, oriented geodesics, common perpendiculars and the
// orientation predicates used by the arc census.
//
// Conventions:
//  - metric (dx^2 + dy^2) / y^2, orientation dx ^ dy positive
//  - tangent vectors are stored in Euclidean components but normalized to
//    unit *hyperbolic* length (Euclidean norm y at height y)
//  - geometric identity checks at 1e-9, matrix normalization at 1e-12

#include <optional>
#include <stdexcept>
#include <string>

namespace ortholink {

inline constexpr double kGeomTol = 1e-9;
inline constexpr double kMatTol = 1e-12;

struct NotHyperbolic : std::runtime_error {
    explicit NotHyperbolic(const std::string& what) : std::runtime_error(what) {}
};
struct IdenticalLines : std::runtime_error {
    explicit IdenticalLines(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateTangent : std::runtime_error {
    explicit DegenerateTangent(const std::string& what) : std::runtime_error(what) {}
};

struct HPoint {
    double x = 0.0;
    double y = 1.0;  // must stay > 0
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Point of the ideal boundary RP^1 stored as a normalized projective pair
// (p : q) with q >= 0; infinity is (1 : 0).  Keeping both coordinates avoids
// any special-case overflow when Mobius maps send finite points to infinity.
class IdealPoint {
  public:
    IdealPoint() : p_(1.0), q_(0.0) {}
    static IdealPoint finite(double t);
    static IdealPoint infinity();
    static IdealPoint projective(double p, double q);

    bool is_infinity(double tol = kGeomTol) const { return std::abs(q_) <= tol; }
    double value() const;  // finite coordinate; throws on infinity
    double p() const { return p_; }
    double q() const { return q_; }

    // angle in [0, pi) parametrizing RP^1; equal points have equal angle
    // up to wrap-around at pi ~ 0
    double angle() const;

    bool approx_equal(const IdealPoint& other, double tol = kGeomTol) const;

  private:
    double p_, q_;
    void normalize();
};

// Element of PSL(2,R): det-1 matrix with canonical sign (first entry of
// (a,b,c,d) larger than kMatTol in absolute value is positive).
class Isometry {
  public:
    Isometry() : a_(1), b_(0), c_(0), d_(1) {}
    Isometry(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double trace() const { return a_ + d_; }

    Isometry inverse() const;
    // sign-canonicalized adjugate (d, -b, -c, a) with no renormalization: an
    // exact involution on the stored bits, used where inverse pairs must
    // match bit for bit
    Isometry adjugate() const;
    // bypasses normalization; caller guarantees det 1 and canonical sign
    static Isometry raw(double a, double b, double c, double d);
    Isometry operator*(const Isometry& rhs) const;

    HPoint operator()(const HPoint& z) const;
    IdealPoint operator()(const IdealPoint& t) const;
    // pushforward of a tangent vector at z (conformal factor |g'(z)|)
    Vec2 push_tangent(const HPoint& z, const Vec2& v) const;

    bool is_hyperbolic() const { return std::abs(trace()) > 2.0 + kMatTol; }
    double max_abs_entry_diff(const Isometry& other) const;

  private:
    double a_, b_, c_, d_;
};

// Oriented complete geodesic, stored by its ordered ideal endpoints.
struct GeodesicLine {
    IdealPoint p_minus;  // repelling / starting end
    IdealPoint p_plus;   // attracting / forward end

    GeodesicLine() = default;
    GeodesicLine(IdealPoint m, IdealPoint p);

    bool is_vertical(double tol = kGeomTol) const;
    // Euclidean center/radius of the carrying semicircle (finite endpoints)
    double center() const;
    double radius() const;
    // vertical line abscissa
    double abscissa() const;

    bool contains(const HPoint& z, double tol = kGeomTol) const;
    // Euclidean components of the oriented unit (hyperbolic) tangent at a
    // point of the line
    Vec2 tangent_at(const HPoint& z) const;
    // signed hyperbolic arclength coordinate along the oriented line
    double arclength_coord(const HPoint& z) const;
    // point of the line at a given arclength coordinate
    HPoint point_at(double coord) const;

    GeodesicLine reversed() const { return GeodesicLine(p_plus, p_minus); }
    bool same_unoriented(const GeodesicLine& other, double tol = kGeomTol) const;

    GeodesicLine apply(const Isometry& g) const;
};

struct PerpSegment {
    double length = 0.0;
    HPoint foot1, foot2;
    Vec2 dir1;  // unit tangent at foot1 pointing toward foot2
    Vec2 dir2;  // unit tangent at foot2 pointing away from foot1 (direction of travel)
};

struct PointLineResult {
    double distance = 0.0;
    HPoint foot;
    Vec2 dir_at_foot;        // unit tangent at the foot pointing toward the query point
    bool dir_defined = true; // false when the point lies on the line
};

HPoint mobius_apply(const Isometry& g, const HPoint& z);

double dist(const HPoint& p, const HPoint& q);

// Oriented axis of a hyperbolic element, from repelling to attracting fixed
// point; throws NotHyperbolic when |trace| <= 2.
GeodesicLine axis(const Isometry& g);

double translation_length(const Isometry& g);

// Unique common perpendicular between two geodesics whose closures in the
// compactified plane are disjoint; nullopt for crossing or asymptotic lines.
// Throws IdenticalLines when the endpoint sets coincide.
std::optional<PerpSegment> common_perpendicular(const GeodesicLine& L1, const GeodesicLine& L2);

PointLineResult point_to_line(const HPoint& p, const GeodesicLine& L);

// Sign of det[v | tangent of L] at the basepoint: +1 when (v, L-tangent) is a
// positively oriented frame.  v must be orthogonal to L at base.
int side_sign(const GeodesicLine& L, const HPoint& base, const Vec2& v);

}  // namespace ortholink
