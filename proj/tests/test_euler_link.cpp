#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ortholink/diagram_fixtures.hpp"
#include "ortholink/euler_link.hpp"

#include <set>
#include <sstream>

using namespace ortholink;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

// chi of the open region {f >= j} minus its boundary
int open_chi(const CurveDiagram& D, const ConstructibleFunction& f, int j) {
    DiagramFaces F = compute_faces(D);
    std::vector<bool> in(F.count);
    for (int face = 0; face < F.count; ++face) in[face] = f.values[face] >= j;
    int nf = 0, ne = 0, nv = 0;
    for (int face = 0; face < F.count; ++face) nf += in[face] ? 1 : 0;
    std::vector<bool> vertex_all(D.num_vertices, true);
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        std::size_t t = static_cast<std::size_t>(D.half_edges[h].twin);
        if (h < t && in[F.face_of[h]] && in[F.face_of[t]]) ++ne;
        if (!in[F.face_of[h]]) vertex_all[D.half_edges[h].origin] = false;
    }
    for (int v = 0; v < D.num_vertices; ++v) nv += vertex_all[v] ? 1 : 0;
    return nv - ne + nf;
}

// boundary of the closed sublevel complex is a disjoint union of circles?
bool boundary_is_circles(const CurveDiagram& D, const ConstructibleFunction& f, int j) {
    DiagramFaces F = compute_faces(D);
    std::vector<bool> in(F.count);
    for (int face = 0; face < F.count; ++face) in[face] = f.values[face] >= j;
    // boundary edges: exactly one side inside
    std::vector<int> user_deg(D.num_vertices, 0);
    bool any = false;
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        std::size_t t = static_cast<std::size_t>(D.half_edges[h].twin);
        if (h > t) continue;
        bool a = in[F.face_of[h]], b = in[F.face_of[t]];
        if (a != b) {
            any = true;
            ++user_deg[D.half_edges[h].origin];
            ++user_deg[D.half_edges[t].origin];
        }
    }
    if (!any) return false;
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        std::size_t t = static_cast<std::size_t>(D.half_edges[h].twin);
        if (h > t) continue;
        bool a = in[F.face_of[h]], b = in[F.face_of[t]];
        if (a != b) continue;
        // a boundary vertex incident to interior-and-exterior transitions of
        // degree != 2 is a corner/crossing, not a circle point
    }
    for (int v = 0; v < D.num_vertices; ++v)
        if (user_deg[v] != 0 && user_deg[v] != 2) return false;
    return true;
}

}  // namespace

TEST_CASE("all fixtures validate") {
    for (const std::string& name : fixture_names()) {
        CurveDiagram D = fixture_by_name(name);
        ValidationReport rep = validate_diagram(D);
        INFO(name);
        for (const auto& v : rep.violations) { INFO(v); }
        CHECK(rep.valid());
    }
}

TEST_CASE("distinct points: value at zero is 1/chi = -1/2") {
    CurveDiagram D = fixture_distinct_points();
    CHECK(value_at_zero(D) == rat(-1, 2));
    CHECK(linking(D) == rat(1, 2));
    CHECK(rat(D.declared_chi) * linking(D) == rat(-1));  // chi L = -1
}

TEST_CASE("coincident points: chi L = chi - 1") {
    CurveDiagram D = fixture_coincident_points();
    CHECK(rat(D.declared_chi) * linking(D) == rat(D.declared_chi - 1));
}

TEST_CASE("same point via push-off circle: value 1/chi - 1 = -3/2") {
    CurveDiagram D = fixture_same_point_pushoff();
    CHECK(value_at_zero(D) == rat(-3, 2));
    ConstructibleFunction f1 = constructible_function(D, 0);
    CHECK(f1.max_value == 1);
    CHECK(chi_of_f(D, f1) == 1);  // the push-off bounds a disk
    CHECK(sublevel_chi(D, f1, 1) == 1);
}

TEST_CASE("separating loop with circle inside the torus side: value 1/2") {
    CurveDiagram D = fixture_separating_loop_and_circle();
    CHECK(value_at_zero(D) == rat(1, 2));
    ConstructibleFunction f1 = constructible_function(D, 0);
    CHECK(sublevel_chi(D, f1, 1) == -1);  // one-holed torus
    ConstructibleFunction f2 = constructible_function(D, 1);
    CHECK(chi_of_f(D, f2) == 1);
    CHECK(chi_product(D, f1, f2) == 1);
    CHECK(chi_curve_intersection(D) == 0);
}

TEST_CASE("separating loop alone: sublevel is a one-holed torus") {
    CurveDiagram D = fixture_separating_loop();
    ConstructibleFunction f1 = constructible_function(D, 0);
    CHECK(f1.max_value == 1);
    CHECK(sublevel_chi(D, f1, 1) == -1);
    CHECK(chi_of_f(D, f1) == -1);
    // point on the other side: product term 0
    CHECK(value_at_zero(D) == -rat(-1, -2));  // eps=-1, -( (-1)(1)/(-2) ) = -1/2
    CHECK(value_at_zero(D) == rat(-1, 2));
}

TEST_CASE("figure-eight takes values {0,1,2} and chi(f) = 2") {
    CurveDiagram D = fixture_figure_eight();
    ConstructibleFunction f = constructible_function(D, 0);
    std::multiset<int> vals(f.values.begin(), f.values.end());
    CHECK(vals == std::multiset<int>{0, 1, 1, 2});
    CHECK(sublevel_chi(D, f, 1) == 1);  // two lobes glued along the bigon
    CHECK(sublevel_chi(D, f, 2) == 1);  // the bigon itself
    CHECK(chi_of_f(D, f) == 2);
}

TEST_CASE("nested circles: L = 3/2") {
    CurveDiagram D = fixture_nested_circles();
    CHECK(linking(D) == rat(3, 2));
    ConstructibleFunction f1 = constructible_function(D, 0);
    ConstructibleFunction f2 = constructible_function(D, 1);
    CHECK(chi_of_f(D, f1) == 1);
    CHECK(chi_of_f(D, f2) == 1);
    CHECK(chi_product(D, f1, f2) == 1);  // nested disks intersect in the inner one
}

TEST_CASE("transverse crossings: chi of the intersection counts them") {
    CurveDiagram D = fixture_crossing_circles();
    CHECK(chi_curve_intersection(D) == 2);
    CHECK(linking(D) == rat(1, 2));
    CHECK(value_at_zero(D) == rat(-1, 2));
    CHECK(rat(D.declared_chi) * linking(D) == rat(-1));
    // disjoint curves have empty intersection
    CHECK(chi_curve_intersection(fixture_nested_circles()) == 0);
}

TEST_CASE("annulus sublevel has chi 0") {
    CurveDiagram D = fixture_annulus_curve();
    ConstructibleFunction f = constructible_function(D, 0);
    CHECK(f.max_value == 1);
    CHECK(sublevel_chi(D, f, 1) == 0);
}

TEST_CASE("non-separating loop is rejected as not null-homologous") {
    CurveDiagram D = fixture_nonseparating_loop();
    CHECK(validate_diagram(D).valid());
    CHECK_THROWS_AS(constructible_function(D, 1), NotNullHomologous);
    CHECK_THROWS_AS(linking(D), NotNullHomologous);
}

TEST_CASE("epsilon of the homotopy class") {
    CHECK(epsilon_of(CurveKind::PointClass) == +1);
    CHECK(epsilon_of(CurveKind::LoopClass) == -1);
}

TEST_CASE("validation rejects a triple self-intersection") {
    DiagramBuilder b;
    int v = b.add_vertex();
    auto [ap, am] = b.add_edge(v, v);
    auto [bp, bm] = b.add_edge(v, v);
    auto [cp, cm] = b.add_edge(v, v);
    auto [dp, dm] = b.add_edge(v, v);
    int w = b.add_vertex();
    auto [l1p, l1m] = b.add_edge(w, w, CurveLabel::C1, true);
    auto [l2p, l2m] = b.add_edge(w, w, CurveLabel::C1, true);
    auto [l3p, l3m] = b.add_edge(w, w, CurveLabel::C1, true);
    auto [kp, km] = b.add_edge(v, w);
    b.add_face({l1p});
    b.add_face({l2p});
    b.add_face({l3p});
    b.add_face({ap, bp, am, bm, cp, dp, cm, dm, kp, l1m, l2m, l3m, km});
    auto res = b.build(CurveKind::PointClass, CurveKind::PointClass, -2);
    res.diagram.marked_face[1] = res.face_ids[0];
    ValidationReport rep = validate_diagram(res.diagram);
    CHECK_FALSE(rep.valid());
    bool found = false;
    for (const auto& viol : rep.violations)
        if (viol.find("multiplicity > 2") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validation rejects a non-alternating crossing") {
    DiagramBuilder b;
    int v = b.add_vertex();
    auto [ap, am] = b.add_edge(v, v);
    auto [bp, bm] = b.add_edge(v, v);
    auto [cp, cm] = b.add_edge(v, v);
    auto [dp, dm] = b.add_edge(v, v);
    int w = b.add_vertex();
    auto [l1p, l1m] = b.add_edge(w, w, CurveLabel::C1, true);
    auto [l2p, l2m] = b.add_edge(w, w, CurveLabel::C2, true);
    auto [kp, km] = b.add_edge(v, w);
    b.add_face({l1p});
    b.add_face({l2p});
    b.add_face({ap, bp, am, bm, cp, dp, cm, dm, kp, l1m, l2m, km});
    auto res = b.build(CurveKind::PointClass, CurveKind::PointClass, -2);
    ValidationReport rep = validate_diagram(res.diagram);
    CHECK_FALSE(rep.valid());
    bool found = false;
    for (const auto& viol : rep.violations)
        if (viol.find("non-alternating crossing") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validation flags a chi mismatch") {
    CurveDiagram D = fixture_distinct_points();
    D.declared_chi = -4;
    CHECK_FALSE(validate_diagram(D).valid());
}

TEST_CASE("decomposition: sublevel boundaries reproduce each labeled edge once") {
    for (const std::string& name :
         {std::string("same-point-pushoff"), std::string("separating-loop-and-circle"),
          std::string("figure-eight"), std::string("nested-circles"),
          std::string("crossing-circles")}) {
        CurveDiagram D = fixture_by_name(name);
        DiagramFaces F = compute_faces(D);
        for (int curve = 0; curve < 2; ++curve) {
            if (!D.curve_has_edges(curve)) continue;
            ConstructibleFunction f = constructible_function(D, curve);
            CurveLabel want = curve == 0 ? CurveLabel::C1 : CurveLabel::C2;
            std::size_t labeled = 0, boundary_sum = 0;
            for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
                if (D.label[h] != want || !D.along[h]) continue;
                ++labeled;
                int left = f.values[F.face_of[h]];
                int right = f.values[F.face_of[static_cast<std::size_t>(D.half_edges[h].twin)]];
                CHECK(left - right == 1);  // crossing the oriented curve raises f by one
                for (int j = 1; j <= f.max_value; ++j)
                    if (left >= j && right < j) ++boundary_sum;
            }
            CHECK(boundary_sum == labeled);  // each edge on exactly one sublevel boundary
        }
    }
}

TEST_CASE("closed and open sublevel regions agree when the boundary is circles") {
    for (const std::string& name :
         {std::string("same-point-pushoff"), std::string("separating-loop-and-circle"),
          std::string("nested-circles"), std::string("annulus-curve")}) {
        CurveDiagram D = fixture_by_name(name);
        for (int curve = 0; curve < 2; ++curve) {
            if (!D.curve_has_edges(curve)) continue;
            ConstructibleFunction f = constructible_function(D, curve);
            for (int j = 1; j <= f.max_value; ++j) {
                if (!boundary_is_circles(D, f, j)) continue;
                CHECK(sublevel_chi(D, f, j) == open_chi(D, f, j));
            }
        }
    }
}

TEST_CASE("diagram file round trip preserves the linking data") {
    for (const std::string& name : fixture_names()) {
        if (name == "nonseparating-loop") continue;
        CurveDiagram D = fixture_by_name(name);
        std::ostringstream out;
        print_diagram_text(D, out);
        std::istringstream in(out.str());
        CurveDiagram E = parse_diagram_text(in);
        INFO(name);
        CHECK(validate_diagram(E).valid());
        CHECK(linking(E) == linking(D));
        CHECK(value_at_zero(E) == value_at_zero(D));
    }
}

TEST_CASE("marked vertex variant of the distinct-points case") {
    CurveDiagram D = fixture_distinct_points();
    D.marked_face[1] = -1;
    D.marked_vertex[1] = 0;  // the base vertex carries no curve
    CHECK(validate_diagram(D).valid());
    CHECK(value_at_zero(D) == rat(-1, 2));
}

TEST_CASE("randomized suite: integrality, symmetry, subdivision invariance") {
    std::vector<std::string> templates = {"distinct-points",
                                          "coincident-points",
                                          "same-point-pushoff",
                                          "separating-loop-and-circle",
                                          "figure-eight",
                                          "nested-circles",
                                          "crossing-circles"};
    int count = 0;
    for (const std::string& name : templates) {
        CurveDiagram base = fixture_by_name(name);
        Rational L0 = linking(base);
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            CurveDiagram D = random_subdivide(base, seed * 7919, 1 + static_cast<int>(seed));
            ++count;
            INFO(name << " seed " << seed);
            ValidationReport rep = validate_diagram(D);
            for (const auto& v : rep.violations) { INFO(v); }
            REQUIRE(rep.valid());
            Rational L = linking(D);
            CHECK(L == L0);                              // subdivision invariance
            CHECK((rat(D.declared_chi) * L).denominator() == 1);  // chi L integral
            CHECK(linking(swap_curves(D)) == L);         // C1 <-> C2 symmetry
        }
    }
    CHECK(count >= 50);
}

TEST_CASE("double orientation flip leaves the linking unchanged") {
    // both curves must carry edges: a bare point has no orientation, and
    // reversing a single curve genuinely moves the value
    for (const std::string& name :
         {std::string("separating-loop-and-circle"), std::string("nested-circles"),
          std::string("crossing-circles")}) {
        CurveDiagram D = fixture_by_name(name);
        CurveDiagram R = reverse_curve(reverse_curve(D, 0), 1);
        CHECK(validate_diagram(R).valid());
        CHECK(linking(R) == linking(D));
        for (std::uint64_t seed : {11u, 23u}) {
            CurveDiagram S = random_subdivide(D, seed, 4);
            CurveDiagram RS = reverse_curve(reverse_curve(S, 0), 1);
            CHECK(linking(RS) == linking(S));
        }
    }
}

TEST_CASE("malformed rotation systems are rejected rather than looping") {
    CurveDiagram D = fixture_distinct_points();
    D.half_edges[0].next = 0;  // break the rotation permutation
    CHECK_FALSE(validate_diagram(D).valid());
}

TEST_CASE("disjoint circles: empty product, L = 1/2") {
    CurveDiagram D = fixture_disjoint_circles();
    REQUIRE(validate_diagram(D).valid());
    ConstructibleFunction f1 = constructible_function(D, 0);
    ConstructibleFunction f2 = constructible_function(D, 1);
    CHECK(chi_product(D, f1, f2) == 0);  // all sublevel intersections empty
    CHECK(chi_curve_intersection(D) == 0);
    CHECK(linking(D) == rat(1, 2));
    ConstructibleFunction zero = f1;
    std::fill(zero.values.begin(), zero.values.end(), 0);
    zero.max_value = 0;
    CHECK(chi_of_f(D, zero) == 0);
    CHECK(chi_product(D, f1, zero) == 0);
}

TEST_CASE("four transverse crossings") {
    CurveDiagram D = fixture_four_crossings();
    ValidationReport rep = validate_diagram(D);
    for (const auto& viol : rep.violations) { INFO(viol); }
    REQUIRE(rep.valid());
    CHECK(chi_curve_intersection(D) == 4);
    ConstructibleFunction f1 = constructible_function(D, 0);
    ConstructibleFunction f2 = constructible_function(D, 1);
    CHECK(chi_of_f(D, f1) == 1);
    CHECK(chi_of_f(D, f2) == 1);
    CHECK(chi_product(D, f1, f2) == 1);  // the central square with its corners
    CHECK(linking(D) == rat(-1, 2));
    CHECK(value_at_zero(D) == rat(1, 2));
    // survives random subdivision
    CurveDiagram S = random_subdivide(D, 99, 6);
    CHECK(linking(S) == rat(-1, 2));
}
