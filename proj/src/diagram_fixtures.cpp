#include "ortholink/diagram_fixtures.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ortholink {

namespace {

// one-vertex octagon skeleton: four unlabeled loops and the canonical
// boundary walk a b a^-1 b^-1 c d c^-1 d^-1, chi = 1 - 4 + 1 = -2
struct Octagon {
    DiagramBuilder b;
    int v;
    std::vector<int> walk;
};

Octagon make_octagon() {
    Octagon oct;
    oct.v = oct.b.add_vertex();
    auto [ap, am] = oct.b.add_edge(oct.v, oct.v);
    auto [bp, bm] = oct.b.add_edge(oct.v, oct.v);
    auto [cp, cm] = oct.b.add_edge(oct.v, oct.v);
    auto [dp, dm] = oct.b.add_edge(oct.v, oct.v);
    oct.walk = {ap, bp, am, bm, cp, dp, cm, dm};
    return oct;
}

}  // namespace

CurveDiagram fixture_distinct_points() {
    Octagon oct = make_octagon();
    auto [kp, km] = oct.b.add_edge(oct.v, oct.v);  // chord splitting the face
    std::vector<int> f1(oct.walk.begin(), oct.walk.begin() + 4);
    f1.push_back(kp);
    std::vector<int> f2{km};
    f2.insert(f2.end(), oct.walk.begin() + 4, oct.walk.end());
    oct.b.add_face(f1);
    oct.b.add_face(f2);
    auto res = oct.b.build(CurveKind::PointClass, CurveKind::PointClass, -2);
    res.diagram.marked_face[0] = res.face_ids[0];
    res.diagram.marked_face[1] = res.face_ids[1];
    return res.diagram;
}

CurveDiagram fixture_coincident_points() {
    CurveDiagram D = fixture_distinct_points();
    D.marked_face[1] = D.marked_face[0];
    return D;
}

CurveDiagram fixture_same_point_pushoff() {
    Octagon oct = make_octagon();
    int w = oct.b.add_vertex();
    auto [lp, lm] = oct.b.add_edge(w, w, CurveLabel::C1, true);  // disk on the left of lp
    auto [kp, km] = oct.b.add_edge(oct.v, w);
    oct.b.add_face({lp});
    std::vector<int> outer = oct.walk;
    outer.push_back(kp);
    outer.push_back(lm);
    outer.push_back(km);
    oct.b.add_face(outer);
    auto res = oct.b.build(CurveKind::PointClass, CurveKind::PointClass, -2);
    res.diagram.marked_face[1] = res.face_ids[0];  // the point sits inside the disk
    return res.diagram;
}

CurveDiagram fixture_separating_loop_and_circle() {
    DiagramBuilder b;
    int v = b.add_vertex();
    int w = b.add_vertex();
    auto [pp, pm] = b.add_edge(v, v);  // handles of the torus side
    auto [qp, qm] = b.add_edge(v, v);
    auto [rp, rm] = b.add_edge(v, v);  // handles of the other side
    auto [tp, tm] = b.add_edge(v, v);
    auto [sp, sm] = b.add_edge(v, v, CurveLabel::C1, true);  // separating loop
    auto [lp, lm] = b.add_edge(w, w, CurveLabel::C2, true);  // circle in the torus side
    auto [kp, km] = b.add_edge(v, w);
    b.add_face({pp, qp, pm, qm, sp, kp, lm, km});  // torus side, circle exterior
    b.add_face({lp});                              // circle disk
    b.add_face({rp, tp, rm, tm, sm});              // other side
    auto res = b.build(CurveKind::LoopClass, CurveKind::PointClass, -2);
    return res.diagram;
}

CurveDiagram fixture_separating_loop() {
    DiagramBuilder b;
    int v = b.add_vertex();
    auto [pp, pm] = b.add_edge(v, v);
    auto [qp, qm] = b.add_edge(v, v);
    auto [rp, rm] = b.add_edge(v, v);
    auto [tp, tm] = b.add_edge(v, v);
    auto [sp, sm] = b.add_edge(v, v, CurveLabel::C1, true);
    b.add_face({pp, qp, pm, qm, sp});
    b.add_face({rp, tp, rm, tm, sm});
    auto res = b.build(CurveKind::LoopClass, CurveKind::PointClass, -2);
    res.diagram.marked_face[1] = res.face_ids[1];  // point on the non-torus side
    return res.diagram;
}

namespace {

// the two-circle arrangement (lens, two crescents, outer region) connected
// to the octagon; arcs labeled lab1 (first circle) and lab2 (second circle)
DiagramBuilder::Result venn_arrangement(CurveLabel lab1, CurveLabel lab2, CurveKind k1,
                                        CurveKind k2) {
    DiagramBuilder b;
    int v = b.add_vertex();
    auto [ap, am] = b.add_edge(v, v);
    auto [bp, bm] = b.add_edge(v, v);
    auto [cp, cm] = b.add_edge(v, v);
    auto [dp, dm] = b.add_edge(v, v);
    int w1 = b.add_vertex(), w2 = b.add_vertex();
    auto [Aout, Aout_t] = b.add_edge(w1, w2, lab1, true);  // outer arc of circle A
    auto [Amid, Amid_t] = b.add_edge(w2, w1, lab1, true);  // lens-facing arc of A
    auto [Bmid, Bmid_t] = b.add_edge(w1, w2, lab2, true);  // lens-facing arc of B
    auto [Bout, Bout_t] = b.add_edge(w2, w1, lab2, true);  // outer arc of circle B
    auto [kp, km] = b.add_edge(v, w2);
    b.add_face({Amid, Bmid});            // lens
    b.add_face({Aout, Bmid_t});          // A-only crescent
    b.add_face({Amid_t, Bout});          // B-only crescent
    std::vector<int> outer{Aout_t, Bout_t, km, ap, bp, am, bm, cp, dp, cm, dm, kp};
    b.add_face(outer);
    return b.build(k1, k2, -2);
}

}  // namespace

CurveDiagram fixture_figure_eight() {
    auto res = venn_arrangement(CurveLabel::C1, CurveLabel::C1, CurveKind::PointClass,
                                CurveKind::PointClass);
    res.diagram.marked_face[1] = res.face_ids[3];  // bare point in the outer region
    return res.diagram;
}

CurveDiagram fixture_crossing_circles() {
    return venn_arrangement(CurveLabel::C1, CurveLabel::C2, CurveKind::PointClass,
                            CurveKind::PointClass)
        .diagram;
}

CurveDiagram fixture_nested_circles() {
    Octagon oct = make_octagon();
    int w1 = oct.b.add_vertex(), w2 = oct.b.add_vertex();
    auto [l1p, l1m] = oct.b.add_edge(w1, w1, CurveLabel::C1, true);
    auto [l2p, l2m] = oct.b.add_edge(w2, w2, CurveLabel::C2, true);
    auto [k1p, k1m] = oct.b.add_edge(oct.v, w1);
    auto [k2p, k2m] = oct.b.add_edge(w1, w2);
    oct.b.add_face({l2p});                    // inner disk
    oct.b.add_face({l1p, k2p, l2m, k2m});     // annulus between the circles
    std::vector<int> outer = oct.walk;
    outer.push_back(k1p);
    outer.push_back(l1m);
    outer.push_back(k1m);
    oct.b.add_face(outer);
    return oct.b.build(CurveKind::PointClass, CurveKind::PointClass, -2).diagram;
}

CurveDiagram fixture_annulus_curve() {
    Octagon oct = make_octagon();
    int w1 = oct.b.add_vertex(), w2 = oct.b.add_vertex();
    // both circles carry C1, wound so the annulus between them is the
    // superlevel side of each
    auto [l1p, l1m] = oct.b.add_edge(w1, w1, CurveLabel::C1, true);   // annulus left of l1p
    auto [l2p, l2m] = oct.b.add_edge(w2, w2, CurveLabel::C1, false);  // annulus left of l2m
    auto [k1p, k1m] = oct.b.add_edge(oct.v, w1);
    auto [k2p, k2m] = oct.b.add_edge(w1, w2);
    oct.b.add_face({l2p});
    oct.b.add_face({l1p, k2p, l2m, k2m});
    std::vector<int> outer = oct.walk;
    outer.push_back(k1p);
    outer.push_back(l1m);
    outer.push_back(k1m);
    oct.b.add_face(outer);
    auto res = oct.b.build(CurveKind::LoopClass, CurveKind::PointClass, -2);
    res.diagram.marked_face[1] = res.face_ids[2];
    return res.diagram;
}

CurveDiagram fixture_disjoint_circles() {
    Octagon oct = make_octagon();
    int w1 = oct.b.add_vertex(), w2 = oct.b.add_vertex();
    auto [l1p, l1m] = oct.b.add_edge(w1, w1, CurveLabel::C1, true);
    auto [l2p, l2m] = oct.b.add_edge(w2, w2, CurveLabel::C2, true);
    auto [k1p, k1m] = oct.b.add_edge(oct.v, w1);
    auto [k2p, k2m] = oct.b.add_edge(oct.v, w2);
    oct.b.add_face({l1p});
    oct.b.add_face({l2p});
    std::vector<int> outer = oct.walk;
    outer.push_back(k1p);
    outer.push_back(l1m);
    outer.push_back(k1m);
    outer.push_back(k2p);
    outer.push_back(l2m);
    outer.push_back(k2m);
    oct.b.add_face(outer);
    return oct.b.build(CurveKind::PointClass, CurveKind::PointClass, -2).diagram;
}

CurveDiagram fixture_four_crossings() {
    DiagramBuilder b;
    int v = b.add_vertex();
    auto [ap_, am_] = b.add_edge(v, v);
    auto [bp_, bm_] = b.add_edge(v, v);
    auto [cp_, cm_] = b.add_edge(v, v);
    auto [dp_, dm_] = b.add_edge(v, v);
    int w1 = b.add_vertex(), w2 = b.add_vertex(), w3 = b.add_vertex(), w4 = b.add_vertex();
    // two contractible curves through the same four crossings: a quadrilateral
    // and its petal-swapped partner, both counterclockwise
    auto [a1, a1t] = b.add_edge(w1, w2, CurveLabel::C1, true);  // inside the other curve
    auto [a2, a2t] = b.add_edge(w2, w3, CurveLabel::C1, true);
    auto [a3, a3t] = b.add_edge(w3, w4, CurveLabel::C1, true);
    auto [a4, a4t] = b.add_edge(w4, w1, CurveLabel::C1, true);
    auto [b1, b1t] = b.add_edge(w1, w2, CurveLabel::C2, true);
    auto [b2, b2t] = b.add_edge(w2, w3, CurveLabel::C2, true);  // inside the first curve
    auto [b3, b3t] = b.add_edge(w3, w4, CurveLabel::C2, true);
    auto [b4, b4t] = b.add_edge(w4, w1, CurveLabel::C2, true);
    auto [kp, km] = b.add_edge(v, w1);
    b.add_face({a1, b2, a3, b4});  // central square, inside both
    b.add_face({a2, b2t});         // petals inside the first curve only
    b.add_face({a4, b4t});
    b.add_face({b1, a1t});         // petals inside the second curve only
    b.add_face({b3, a3t});
    std::vector<int> outer{a2t, b1t, km, ap_, bp_, am_, bm_, cp_, dp_, cm_, dm_, kp, a4t, b3t};
    b.add_face(outer);
    return b.build(CurveKind::PointClass, CurveKind::PointClass, -2).diagram;
}

CurveDiagram fixture_nonseparating_loop() {
    Octagon oct = make_octagon();
    oct.b.add_face(oct.walk);
    auto res = oct.b.build(CurveKind::PointClass, CurveKind::LoopClass, -2);
    CurveDiagram D = res.diagram;
    // relabel loop `a` (half-edges 0, 1) as the second curve
    D.label[0] = D.label[1] = CurveLabel::C2;
    D.along[0] = true;
    D.marked_face[0] = res.face_ids[0];
    return D;
}

std::vector<std::string> fixture_names() {
    return {"distinct-points",  "coincident-points", "same-point-pushoff",
            "separating-loop-and-circle", "separating-loop",   "figure-eight",
            "nested-circles",   "crossing-circles",  "disjoint-circles",
            "four-crossings",   "annulus-curve",     "nonseparating-loop"};
}

CurveDiagram fixture_by_name(const std::string& name) {
    if (name == "distinct-points") return fixture_distinct_points();
    if (name == "coincident-points") return fixture_coincident_points();
    if (name == "same-point-pushoff") return fixture_same_point_pushoff();
    if (name == "separating-loop-and-circle") return fixture_separating_loop_and_circle();
    if (name == "separating-loop") return fixture_separating_loop();
    if (name == "figure-eight") return fixture_figure_eight();
    if (name == "nested-circles") return fixture_nested_circles();
    if (name == "crossing-circles") return fixture_crossing_circles();
    if (name == "disjoint-circles") return fixture_disjoint_circles();
    if (name == "four-crossings") return fixture_four_crossings();
    if (name == "annulus-curve") return fixture_annulus_curve();
    if (name == "nonseparating-loop") return fixture_nonseparating_loop();
    throw std::invalid_argument("unknown fixture: " + name);
}

// ------------------------------------------------------------- subdivisions

namespace {

void subdivide_edge(CurveDiagram& D, int h) {
    int t = D.half_edges[h].twin;
    int x = D.num_vertices++;
    int h2 = static_cast<int>(D.half_edges.size());
    int t2 = h2 + 1;
    // edge (h: u->w, t: w->u) becomes (h: u->x, t2: x->u) + (h2: x->w, t: w->x)
    D.half_edges.push_back(HalfEdge{x, t, t2});       // h2, next set below
    D.half_edges.push_back(HalfEdge{x, h, h2});       // t2
    D.half_edges[h2].twin = t;
    D.half_edges[t2].twin = h;
    D.half_edges[h].twin = t2;
    D.half_edges[t].twin = h2;
    // rotation at the new vertex: the two ends alternate
    D.half_edges[h2].next = t2;
    D.half_edges[t2].next = h2;
    D.label.push_back(D.label[h]);
    D.label.push_back(D.label[h]);
    D.along.push_back(D.along[h]);  // h2 continues h's direction
    D.along.push_back(D.along[t]);  // t2 continues t's direction
}

// chord between the corners before walk[i] and walk[j] of one face
void split_face(CurveDiagram& D, const std::vector<int>& walk, std::size_t i, std::size_t j) {
    int u = D.half_edges[walk[i]].origin;
    int w = D.half_edges[walk[j]].origin;
    int e = static_cast<int>(D.half_edges.size());
    int tw = e + 1;
    D.half_edges.push_back(HalfEdge{u, tw, -1});
    D.half_edges.push_back(HalfEdge{w, e, -1});
    D.label.push_back(CurveLabel::None);
    D.label.push_back(CurveLabel::None);
    D.along.push_back(false);
    D.along.push_back(false);
    std::size_t m = walk.size();
    auto set_phi = [&](int a, int b) {  // face successor: next(twin(a)) = b
        D.half_edges[D.half_edges[a].twin].next = b;
    };
    set_phi(e, walk[j]);
    set_phi(walk[(i + m - 1) % m], e);
    set_phi(tw, walk[i]);
    set_phi(walk[(j + m - 1) % m], tw);
}

std::vector<std::vector<int>> face_walks(const CurveDiagram& D) {
    DiagramFaces F = compute_faces(D);
    std::vector<std::vector<int>> walks(F.count);
    std::vector<bool> seen(D.half_edges.size(), false);
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        if (seen[h]) continue;
        std::size_t cur = h;
        do {
            seen[cur] = true;
            walks[F.face_of[cur]].push_back(static_cast<int>(cur));
            cur = static_cast<std::size_t>(D.half_edges[D.half_edges[cur].twin].next);
        } while (cur != h);
    }
    return walks;
}

}  // namespace

CurveDiagram random_subdivide(const CurveDiagram& D, std::uint64_t seed, int n_ops) {
    CurveDiagram E = D;
    std::mt19937_64 rng(seed);
    // track marked faces through renumbering by a representative half-edge
    int marked_rep[2] = {-1, -1};
    {
        DiagramFaces F = compute_faces(E);
        for (int i = 0; i < 2; ++i)
            if (E.marked_face[i] >= 0)
                for (std::size_t h = 0; h < E.half_edges.size(); ++h)
                    if (F.face_of[h] == E.marked_face[i]) {
                        marked_rep[i] = static_cast<int>(h);
                        break;
                    }
    }
    for (int op = 0; op < n_ops; ++op) {
        if (rng() % 2 == 0) {
            std::uniform_int_distribution<std::size_t> pick(0, E.half_edges.size() - 1);
            subdivide_edge(E, static_cast<int>(pick(rng)));
        } else {
            auto walks = face_walks(E);
            std::vector<std::size_t> big;
            for (std::size_t f = 0; f < walks.size(); ++f)
                if (walks[f].size() >= 2) big.push_back(f);
            if (big.empty()) continue;
            const auto& walk = walks[big[rng() % big.size()]];
            std::size_t i = rng() % walk.size(), j = rng() % walk.size();
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            split_face(E, walk, i, j);
        }
    }
    DiagramFaces F = compute_faces(E);
    for (int i = 0; i < 2; ++i)
        if (marked_rep[i] >= 0) E.marked_face[i] = F.face_of[marked_rep[i]];
    return E;
}

}  // namespace ortholink
