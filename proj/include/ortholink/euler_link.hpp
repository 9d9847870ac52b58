#pragma once

// Combinatorial engine for the topological side: curve diagrams (rotation
// system CW complexes on a closed surface with two labeled curves),
// constructible functions, Euler integrals of sublevel complexes, and the
// exact linking / value-at-zero formulas.  All arithmetic in this module is
// exact.

#include <boost/rational.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ortholink {

using Rational = boost::rational<long long>;

struct NotNullHomologous : std::runtime_error {
    explicit NotNullHomologous(const std::string& what) : std::runtime_error(what) {}
};

enum class CurveLabel { None, C1, C2 };
enum class CurveKind { PointClass, LoopClass };

// +1 for the trivial homotopy class, -1 otherwise
int epsilon_of(CurveKind kind);

struct HalfEdge {
    int origin = -1;  // vertex id
    int twin = -1;    // paired half-edge
    int next = -1;    // next half-edge counterclockwise around origin
};

// Rotation-system CW complex of the arrangement of the two perturbed curves.
//
// Faces are the orbits of h -> next(twin(h)); the orbit of a half-edge is the
// face on its LEFT.  Face ids are canonical: orbits numbered in order of
// their smallest half-edge id.
//
// A curve's kind tags its homotopy class.  A PointClass curve may be drawn
// either as a bare marked point (no labeled edges, marked face or vertex) or
// as a pushed-off contractible circle carrying labeled edges.
struct CurveDiagram {
    int num_vertices = 0;
    std::vector<HalfEdge> half_edges;
    std::vector<CurveLabel> label;  // per half-edge, equal on twins
    std::vector<bool> along;        // true iff this half-edge points along its curve
    CurveKind kind[2] = {CurveKind::PointClass, CurveKind::PointClass};
    int marked_face[2] = {-1, -1};    // bare PointClass: carrying face ...
    int marked_vertex[2] = {-1, -1};  // ... or carrying vertex
    int declared_chi = 0;

    std::size_t num_edges() const { return half_edges.size() / 2; }
    bool curve_has_edges(int curve) const;  // curve in {0, 1}
};

struct DiagramFaces {
    std::vector<int> face_of;  // per half-edge
    int count = 0;
};

DiagramFaces compute_faces(const CurveDiagram& D);

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate_diagram(const CurveDiagram& D);

struct ConstructibleFunction {
    std::vector<int> values;  // per face, min 0
    int curve = 0;            // 0 for C1, 1 for C2
    int max_value = 0;
};

// Face values by breadth-first crossing increments (+1 right to left over an
// edge of the curve); throws NotNullHomologous when the dual holonomy is
// nonzero.  Requires the curve to carry labeled edges.
ConstructibleFunction constructible_function(const CurveDiagram& D, int curve);

// Euler characteristic V - E + F of the closed subcomplex spanned by the
// faces with f >= j.
int sublevel_chi(const CurveDiagram& D, const ConstructibleFunction& f, int j);

// chi(f) = sum over j >= 1 of chi({f >= j})
int chi_of_f(const CurveDiagram& D, const ConstructibleFunction& f);

// chi(f1 f2) = double sum of chi of intersections of sublevel complexes
int chi_product(const CurveDiagram& D, const ConstructibleFunction& f1,
                const ConstructibleFunction& f2);

// chi of the shared geometry of the two curves: crossing vertices minus
// shared labeled edges (none under transversality)
int chi_curve_intersection(const CurveDiagram& D);

// L = -chi(f1) chi(f2) / chi(X) + chi(f1 f2) - chi(c1 cap c2) / 2, with the
// point conventions chi(X(point)) = 1 and chi(point cap X_2,j) by membership
Rational linking(const CurveDiagram& D);

// N_infty(c1, c2, 0) = epsilon(c1) (chi(f1) chi(f2) / chi(X) - chi(f1 f2)
//                                   + chi(c1 cap c2) / 2) = -epsilon(c1) L
Rational value_at_zero(const CurveDiagram& D);

// exchange the roles of C1 and C2 (labels, kinds, marks)
CurveDiagram swap_curves(const CurveDiagram& D);

// reverse the orientation of one curve's labeled edges
CurveDiagram reverse_curve(const CurveDiagram& D, int curve);

// text format: sections VERTICES / HALFEDGES / EDGES / KIND / CHI
CurveDiagram parse_diagram_text(std::istream& in);
void print_diagram_text(const CurveDiagram& D, std::ostream& out);
CurveDiagram read_diagram_file(const std::string& path);
void write_diagram_file(const CurveDiagram& D, const std::string& path);

// Incremental construction from face boundary walks: add vertices and edges,
// then declare every face as the cyclic sequence of half-edges having that
// face on their left.  build() derives the rotation system and returns the
// diagram plus the canonical face id of each declared face.
class DiagramBuilder {
  public:
    int add_vertex();
    // oriented edge u -> v; returns (forward half-edge, backward half-edge);
    // when labeled, the forward half-edge is the along-curve one iff
    // forward_along
    std::pair<int, int> add_edge(int u, int v, CurveLabel lab = CurveLabel::None,
                                 bool forward_along = true);
    void add_face(std::vector<int> walk);

    struct Result {
        CurveDiagram diagram;
        std::vector<int> face_ids;  // canonical id of each declared face
    };
    Result build(CurveKind kind1, CurveKind kind2, int declared_chi) const;

  private:
    int n_vertices_ = 0;
    std::vector<HalfEdge> half_edges_;
    std::vector<CurveLabel> label_;
    std::vector<bool> along_;
    std::vector<std::vector<int>> faces_;
};

}  // namespace ortholink
