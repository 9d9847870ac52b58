#include "ortholink/euler_link.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace ortholink {

int epsilon_of(CurveKind kind) { return kind == CurveKind::PointClass ? +1 : -1; }

bool CurveDiagram::curve_has_edges(int curve) const {
    CurveLabel want = curve == 0 ? CurveLabel::C1 : CurveLabel::C2;
    for (CurveLabel l : label)
        if (l == want) return true;
    return false;
}

DiagramFaces compute_faces(const CurveDiagram& D) {
    DiagramFaces F;
    F.face_of.assign(D.half_edges.size(), -1);
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        if (F.face_of[h] >= 0) continue;
        int id = F.count++;
        std::size_t cur = h, steps = 0;
        do {
            if (F.face_of[cur] >= 0 || ++steps > D.half_edges.size())
                throw std::invalid_argument("compute_faces: rotation system does not close up");
            F.face_of[cur] = id;
            cur = static_cast<std::size_t>(D.half_edges[D.half_edges[cur].twin].next);
        } while (cur != h);
    }
    return F;
}

namespace {

CurveLabel curve_label(int curve) { return curve == 0 ? CurveLabel::C1 : CurveLabel::C2; }

// half-edges with origin v, in rotation order
std::vector<std::vector<int>> rotation_cycles(const CurveDiagram& D) {
    std::vector<std::vector<int>> at(D.num_vertices);
    std::vector<bool> seen(D.half_edges.size(), false);
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        if (seen[h]) continue;
        int v = D.half_edges[h].origin;
        std::size_t cur = h;
        do {
            seen[cur] = true;
            at[v].push_back(static_cast<int>(cur));
            cur = static_cast<std::size_t>(D.half_edges[cur].next);
        } while (cur != h && !seen[cur]);
    }
    return at;
}

// -1: curve arrives at the origin through this end, +1: leaves, 0: unlabeled
int end_direction(const CurveDiagram& D, int h, int curve) {
    if (D.label[h] != curve_label(curve)) return 0;
    return D.along[h] ? +1 : -1;
}

struct Closure {
    // cells of the closed subcomplex spanned by a face set
    std::vector<bool> face, edge, vertex;  // edge indexed by min(h, twin)
    int chi = 0;
};

Closure closure_of(const CurveDiagram& D, const DiagramFaces& F,
                   const std::vector<bool>& face_in) {
    Closure c;
    c.face = face_in;
    c.edge.assign(D.half_edges.size(), false);
    c.vertex.assign(D.num_vertices, false);
    int nf = 0, ne = 0, nv = 0;
    for (int f = 0; f < F.count; ++f) nf += face_in[f] ? 1 : 0;
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        std::size_t t = static_cast<std::size_t>(D.half_edges[h].twin);
        if (h > t) continue;
        if (face_in[F.face_of[h]] || face_in[F.face_of[t]]) {
            c.edge[h] = true;
            ++ne;
        }
    }
    for (std::size_t h = 0; h < D.half_edges.size(); ++h)
        if (face_in[F.face_of[h]]) c.vertex[D.half_edges[h].origin] = true;
    for (int v = 0; v < D.num_vertices; ++v) nv += c.vertex[v] ? 1 : 0;
    c.chi = nv - ne + nf;
    return c;
}

}  // namespace

// ------------------------------------------------------------------ validate

ValidationReport validate_diagram(const CurveDiagram& D) {
    ValidationReport rep;
    auto bad = [&](const std::string& msg) { rep.violations.push_back(msg); };

    int H = static_cast<int>(D.half_edges.size());
    if (H == 0 || H % 2 != 0) {
        bad("half-edge count must be positive and even");
        return rep;
    }
    if (D.label.size() != D.half_edges.size() || D.along.size() != D.half_edges.size()) {
        bad("label/orientation arrays must match the half-edge count");
        return rep;
    }
    bool structural_ok = true;
    std::vector<int> next_seen(H, 0);
    for (int h = 0; h < H; ++h) {
        const HalfEdge& e = D.half_edges[h];
        if (e.origin < 0 || e.origin >= D.num_vertices || e.twin < 0 || e.twin >= H ||
            e.next < 0 || e.next >= H) {
            bad("half-edge " + std::to_string(h) + " has out-of-range fields");
            structural_ok = false;
            continue;
        }
        if (e.twin == h || D.half_edges[e.twin].twin != h) {
            bad("twin pairing is not a fixed-point-free involution at " + std::to_string(h));
            structural_ok = false;
        }
        if (D.half_edges[e.next].origin != e.origin) {
            bad("rotation successor of " + std::to_string(h) + " has a different origin");
            structural_ok = false;
        }
        ++next_seen[e.next];
        if (D.label[h] != D.label[e.twin]) {
            bad("labels differ across the twin pair at " + std::to_string(h));
            structural_ok = false;
        }
    }
    for (int h = 0; h < H; ++h)
        if (next_seen[h] != 1) {
            bad("rotation system does not close up (next is not a permutation)");
            structural_ok = false;
            break;
        }
    for (int h = 0; h < H && structural_ok; ++h) {
        int t = D.half_edges[h].twin;
        if (h > t) continue;
        if (D.label[h] == CurveLabel::None) {
            if (D.along[h] || D.along[t]) bad("unlabeled edge carries an orientation flag");
        } else if (D.along[h] == D.along[t]) {
            bad("labeled edge must have exactly one along-curve half-edge");
        }
    }
    if (!structural_ok) return rep;

    // connectivity of the 1-skeleton (the face/euler bookkeeping needs it)
    {
        std::vector<bool> seen(D.num_vertices, false);
        std::deque<int> queue{D.half_edges[0].origin};
        seen[static_cast<std::size_t>(D.half_edges[0].origin)] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int h = 0; h < H; ++h)
                if (D.half_edges[h].origin == v) {
                    int w = D.half_edges[D.half_edges[h].twin].origin;
                    if (!seen[w]) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
        }
        for (int v = 0; v < D.num_vertices; ++v)
            if (!seen[v]) {
                bad("1-skeleton is disconnected");
                break;
            }
    }

    DiagramFaces F = compute_faces(D);
    int chi = D.num_vertices - static_cast<int>(D.num_edges()) + F.count;
    if (chi != D.declared_chi)
        bad("euler characteristic mismatch: V-E+F = " + std::to_string(chi) + ", declared " +
            std::to_string(D.declared_chi));
    if (D.declared_chi >= 0) bad("declared euler characteristic must be negative");

    // per-curve vertex conditions
    auto rot = rotation_cycles(D);
    for (int v = 0; v < D.num_vertices; ++v) {
        int deg[2] = {0, 0};
        for (int h : rot[v])
            for (int curve = 0; curve < 2; ++curve)
                if (end_direction(D, h, curve) != 0) ++deg[curve];
        for (int curve = 0; curve < 2; ++curve) {
            if (deg[curve] != 0 && deg[curve] != 2 && deg[curve] != 4)
                bad("vertex " + std::to_string(v) + ": curve multiplicity > 2");
            int balance = 0;
            for (int h : rot[v]) balance += end_direction(D, h, curve);
            if (balance != 0)
                bad("vertex " + std::to_string(v) + ": labeled edges do not chain into walks");
        }
        if (deg[0] == 4 && deg[1] != 0)
            bad("vertex " + std::to_string(v) + ": self-intersection meets a crossing");
        if (deg[1] == 4 && deg[0] != 0)
            bad("vertex " + std::to_string(v) + ": self-intersection meets a crossing");
        for (int curve = 0; curve < 2; ++curve) {
            if (deg[curve] != 4) continue;
            // transverse double point: the two passages pair opposite ends
            std::vector<int> dirs;
            for (int h : rot[v]) {
                int d = end_direction(D, h, curve);
                if (d != 0) dirs.push_back(d);
            }
            if (dirs.size() == 4 && (dirs[0] == dirs[2] || dirs[1] == dirs[3]))
                bad("vertex " + std::to_string(v) + ": double point does not cross transversally");
        }
        if (deg[0] == 2 && deg[1] == 2) {
            std::vector<int> which;
            for (int h : rot[v]) {
                if (end_direction(D, h, 0) != 0) which.push_back(0);
                if (end_direction(D, h, 1) != 0) which.push_back(1);
            }
            if (which.size() == 4 && (which[0] == which[1] || which[1] == which[2]))
                bad("vertex " + std::to_string(v) + ": non-alternating crossing");
        }
    }

    for (int curve = 0; curve < 2; ++curve) {
        bool edges = D.curve_has_edges(curve);
        std::string name = curve == 0 ? "c1" : "c2";
        if (D.kind[curve] == CurveKind::LoopClass && !edges)
            bad(name + ": loop-class curve carries no edges");
        if (!edges) {
            bool face_ok = D.marked_face[curve] >= 0 && D.marked_face[curve] < F.count;
            bool vert_ok = D.marked_vertex[curve] >= 0 && D.marked_vertex[curve] < D.num_vertices;
            if (!face_ok && !vert_ok) bad(name + ": bare point needs a marked face or vertex");
            if (vert_ok) {
                for (int h : rot[D.marked_vertex[curve]])
                    if (D.label[h] != CurveLabel::None) {
                        bad(name + ": marked vertex lies on a curve");
                        break;
                    }
            }
        }
    }
    return rep;
}

// ------------------------------------------------------- constructible / chi

ConstructibleFunction constructible_function(const CurveDiagram& D, int curve) {
    if (!D.curve_has_edges(curve))
        throw std::invalid_argument("constructible_function: curve carries no labeled edges");
    DiagramFaces F = compute_faces(D);
    CurveLabel want = curve_label(curve);

    std::vector<int> value(F.count, 0);
    std::vector<bool> known(F.count, false);
    known[0] = true;
    std::deque<int> queue{0};
    // adjacency across every edge; the increment is +1 from the right face of
    // an along-curve half-edge to its left face
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
            int left = F.face_of[h];
            int right = F.face_of[static_cast<std::size_t>(D.half_edges[h].twin)];
            if (left != f && right != f) continue;
            int delta = 0;  // value(left) - value(right)
            if (D.label[h] == want) delta = D.along[h] ? +1 : -1;
            if (known[left] && known[right]) {
                if (value[left] - value[right] != delta)
                    throw NotNullHomologous(
                        "constructible_function: nonzero holonomy, curve is not null-homologous");
            } else if (known[left]) {
                value[right] = value[left] - delta;
                known[right] = true;
                queue.push_back(right);
            } else if (known[right]) {
                value[left] = value[right] + delta;
                known[left] = true;
                queue.push_back(left);
            }
        }
    }
    for (bool k : known)
        if (!k) throw std::logic_error("constructible_function: dual graph disconnected");

    int mn = *std::min_element(value.begin(), value.end());
    ConstructibleFunction f;
    f.curve = curve;
    f.values.resize(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) f.values[i] = value[i] - mn;
    f.max_value = *std::max_element(f.values.begin(), f.values.end());
    return f;
}

int sublevel_chi(const CurveDiagram& D, const ConstructibleFunction& f, int j) {
    if (j < 1) throw std::invalid_argument("sublevel_chi: level must be >= 1");
    DiagramFaces F = compute_faces(D);
    std::vector<bool> in(F.count, false);
    for (int face = 0; face < F.count; ++face) in[face] = f.values[face] >= j;
    return closure_of(D, F, in).chi;
}

int chi_of_f(const CurveDiagram& D, const ConstructibleFunction& f) {
    int total = 0;
    for (int j = 1; j <= f.max_value; ++j) total += sublevel_chi(D, f, j);
    return total;
}

int chi_product(const CurveDiagram& D, const ConstructibleFunction& f1,
                const ConstructibleFunction& f2) {
    DiagramFaces F = compute_faces(D);
    int total = 0;
    for (int j1 = 1; j1 <= f1.max_value; ++j1) {
        std::vector<bool> in1(F.count);
        for (int f = 0; f < F.count; ++f) in1[f] = f1.values[f] >= j1;
        Closure c1 = closure_of(D, F, in1);
        for (int j2 = 1; j2 <= f2.max_value; ++j2) {
            std::vector<bool> in2(F.count);
            for (int f = 0; f < F.count; ++f) in2[f] = f2.values[f] >= j2;
            Closure c2 = closure_of(D, F, in2);
            int nv = 0, ne = 0, nf = 0;
            for (int f = 0; f < F.count; ++f) nf += (in1[f] && in2[f]) ? 1 : 0;
            for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
                std::size_t t = static_cast<std::size_t>(D.half_edges[h].twin);
                if (h > t) continue;
                ne += (c1.edge[h] && c2.edge[h]) ? 1 : 0;
            }
            for (int v = 0; v < D.num_vertices; ++v) nv += (c1.vertex[v] && c2.vertex[v]) ? 1 : 0;
            total += nv - ne + nf;
        }
    }
    return total;
}

int chi_curve_intersection(const CurveDiagram& D) {
    auto rot = rotation_cycles(D);
    int crossings = 0;
    for (int v = 0; v < D.num_vertices; ++v) {
        int deg[2] = {0, 0};
        for (int h : rot[v]) {
            if (end_direction(D, h, 0) != 0) ++deg[0];
            if (end_direction(D, h, 1) != 0) ++deg[1];
        }
        if (deg[0] == 2 && deg[1] == 2) ++crossings;
    }
    // shared labeled edges are impossible in this encoding (one label per
    // edge), so the edge count of the shared subcomplex is zero
    return crossings;
}

// ------------------------------------------------------------------- linking

namespace {

struct CurveData {
    bool edged = false;
    ConstructibleFunction f;  // when edged
    int chi = 1;              // chi(f) for curves, 1 for a bare point
};

CurveData curve_data(const CurveDiagram& D, int curve) {
    CurveData c;
    c.edged = D.curve_has_edges(curve);
    if (c.edged) {
        c.f = constructible_function(D, curve);
        c.chi = chi_of_f(D, c.f);
    }
    return c;
}

// number of sublevel complexes X_{i,j} containing the marked point of the
// other (bare) curve
int point_membership_count(const CurveDiagram& D, const CurveData& edged, int marked_face,
                           int marked_vertex) {
    if (marked_face >= 0) return edged.f.values[marked_face];
    // a vertex lies in the closure of X_j iff an incident face reaches level j
    DiagramFaces F = compute_faces(D);
    int best = 0;
    for (std::size_t h = 0; h < D.half_edges.size(); ++h)
        if (D.half_edges[h].origin == marked_vertex)
            best = std::max(best, edged.f.values[F.face_of[h]]);
    return best;
}

}  // namespace

Rational linking(const CurveDiagram& D) {
    CurveData c1 = curve_data(D, 0);
    CurveData c2 = curve_data(D, 1);

    long long chi12;
    if (c1.edged && c2.edged) {
        chi12 = chi_product(D, c1.f, c2.f);
    } else if (c1.edged && !c2.edged) {
        chi12 = point_membership_count(D, c1, D.marked_face[1], D.marked_vertex[1]);
    } else if (!c1.edged && c2.edged) {
        chi12 = point_membership_count(D, c2, D.marked_face[0], D.marked_vertex[0]);
    } else {
        bool same_face = D.marked_face[0] >= 0 && D.marked_face[0] == D.marked_face[1];
        bool same_vertex = D.marked_vertex[0] >= 0 && D.marked_vertex[0] == D.marked_vertex[1];
        chi12 = (same_face || same_vertex) ? 1 : 0;
    }

    Rational L = -Rational(static_cast<long long>(c1.chi) * c2.chi, D.declared_chi);
    L += Rational(chi12);
    L -= Rational(chi_curve_intersection(D), 2);
    return L;
}

Rational value_at_zero(const CurveDiagram& D) {
    return -Rational(epsilon_of(D.kind[0])) * linking(D);
}

// ------------------------------------------------------------ transformations

CurveDiagram swap_curves(const CurveDiagram& D) {
    CurveDiagram E = D;
    for (std::size_t h = 0; h < E.label.size(); ++h) {
        if (E.label[h] == CurveLabel::C1)
            E.label[h] = CurveLabel::C2;
        else if (E.label[h] == CurveLabel::C2)
            E.label[h] = CurveLabel::C1;
    }
    std::swap(E.kind[0], E.kind[1]);
    std::swap(E.marked_face[0], E.marked_face[1]);
    std::swap(E.marked_vertex[0], E.marked_vertex[1]);
    return E;
}

CurveDiagram reverse_curve(const CurveDiagram& D, int curve) {
    CurveDiagram E = D;
    CurveLabel want = curve_label(curve);
    for (std::size_t h = 0; h < E.label.size(); ++h)
        if (E.label[h] == want) E.along[h] = !E.along[h];
    return E;
}

// ------------------------------------------------------------------- file IO

namespace {

std::string label_name(CurveLabel l) {
    switch (l) {
        case CurveLabel::C1: return "c1";
        case CurveLabel::C2: return "c2";
        default: return "none";
    }
}

}  // namespace

CurveDiagram parse_diagram_text(std::istream& in) {
    CurveDiagram D;
    enum class Section { None, HalfEdges, Edges } section = Section::None;
    std::map<int, HalfEdge> hes;  // by external id
    struct EdgeLine {
        int he;
        std::string label, along;
    };
    std::vector<EdgeLine> edge_lines;
    std::string line;
    int lineno = 0;
    bool saw_chi = false;
    std::string kind_line[2];
    int kind_face[2] = {-1, -1};
    bool kind_seen[2] = {false, false};

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("diagram line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "VERTICES") {
            if (!(ss >> D.num_vertices) || D.num_vertices <= 0) fail("bad vertex count");
        } else if (tok == "HALFEDGES") {
            section = Section::HalfEdges;
        } else if (tok == "EDGES") {
            section = Section::Edges;
        } else if (tok == "KIND") {
            std::string which, what;
            if (!(ss >> which >> what)) fail("expected `KIND c1|c2 point|loop [face]`");
            int idx = which == "c1" ? 0 : which == "c2" ? 1 : -1;
            if (idx < 0) fail("KIND must name c1 or c2");
            if (what != "point" && what != "loop") fail("kind must be point or loop");
            kind_line[idx] = what;
            kind_seen[idx] = true;
            int face;
            if (ss >> face) kind_face[idx] = face;
        } else if (tok == "CHI") {
            if (!(ss >> D.declared_chi)) fail("bad CHI value");
            saw_chi = true;
        } else if (section == Section::HalfEdges) {
            int id = std::stoi(tok), origin, twin, next;
            if (!(ss >> origin >> twin >> next)) fail("expected `<id> <origin> <twin> <next>`");
            if (hes.count(id)) fail("duplicate half-edge id");
            hes[id] = HalfEdge{origin, twin, next};
        } else if (section == Section::Edges) {
            EdgeLine e;
            e.he = std::stoi(tok);
            if (!(ss >> e.label >> e.along)) fail("expected `<he> <label> <along|->`");
            edge_lines.push_back(e);
        } else {
            fail("unexpected token `" + tok + "`");
        }
    }
    if (hes.empty()) throw std::runtime_error("diagram: no half-edges");
    if (!saw_chi) throw std::runtime_error("diagram: missing CHI");
    if (!kind_seen[0] || !kind_seen[1]) throw std::runtime_error("diagram: missing KIND lines");

    // remap external ids to dense indices in ascending order
    std::map<int, int> remap;
    for (const auto& [id, he] : hes) remap.emplace(id, static_cast<int>(remap.size()));
    D.half_edges.resize(hes.size());
    for (const auto& [id, he] : hes) {
        HalfEdge e = he;
        if (!remap.count(e.twin) || !remap.count(e.next))
            throw std::runtime_error("diagram: half-edge references unknown id");
        if (e.origin < 0 || e.origin >= D.num_vertices)
            throw std::runtime_error("diagram: half-edge origin out of range");
        e.twin = remap[e.twin];
        e.next = remap[e.next];
        D.half_edges[static_cast<std::size_t>(remap[id])] = e;
    }
    D.label.assign(D.half_edges.size(), CurveLabel::None);
    D.along.assign(D.half_edges.size(), false);
    std::vector<bool> edge_seen(D.half_edges.size(), false);
    for (const EdgeLine& e : edge_lines) {
        if (!remap.count(e.he)) throw std::runtime_error("diagram: EDGES references unknown id");
        int h = remap[e.he];
        int t = D.half_edges[static_cast<std::size_t>(h)].twin;
        CurveLabel lab = e.label == "c1"     ? CurveLabel::C1
                         : e.label == "c2"   ? CurveLabel::C2
                         : e.label == "none" ? CurveLabel::None
                                             : throw std::runtime_error(
                                                   "diagram: unknown label " + e.label);
        D.label[static_cast<std::size_t>(h)] = lab;
        D.label[static_cast<std::size_t>(t)] = lab;
        edge_seen[static_cast<std::size_t>(h)] = edge_seen[static_cast<std::size_t>(t)] = true;
        if (lab != CurveLabel::None) {
            if (e.along == "-")
                throw std::runtime_error("diagram: labeled edge needs an along half-edge");
            int along_ext = std::stoi(e.along);
            if (!remap.count(along_ext))
                throw std::runtime_error("diagram: along references unknown id");
            int ah = remap[along_ext];
            if (ah != h && ah != t)
                throw std::runtime_error("diagram: along half-edge not part of the edge");
            D.along[static_cast<std::size_t>(ah)] = true;
        }
    }
    for (std::size_t h = 0; h < edge_seen.size(); ++h)
        if (!edge_seen[h]) throw std::runtime_error("diagram: EDGES must cover every edge");

    for (int i = 0; i < 2; ++i) {
        D.kind[i] = kind_line[i] == "point" ? CurveKind::PointClass : CurveKind::LoopClass;
        D.marked_face[i] = kind_face[i];
    }
    return D;
}

void print_diagram_text(const CurveDiagram& D, std::ostream& out) {
    out << "# ortholink curve diagram\n";
    out << "VERTICES " << D.num_vertices << "\n";
    out << "HALFEDGES\n";
    for (std::size_t h = 0; h < D.half_edges.size(); ++h)
        out << h << " " << D.half_edges[h].origin << " " << D.half_edges[h].twin << " "
            << D.half_edges[h].next << "\n";
    out << "EDGES\n";
    for (std::size_t h = 0; h < D.half_edges.size(); ++h) {
        std::size_t t = static_cast<std::size_t>(D.half_edges[h].twin);
        if (h > t) continue;
        out << h << " " << label_name(D.label[h]) << " ";
        if (D.label[h] == CurveLabel::None)
            out << "-";
        else
            out << (D.along[h] ? h : t);
        out << "\n";
    }
    for (int i = 0; i < 2; ++i) {
        out << "KIND " << (i == 0 ? "c1" : "c2") << " "
            << (D.kind[i] == CurveKind::PointClass ? "point" : "loop");
        if (D.marked_face[i] >= 0) out << " " << D.marked_face[i];
        out << "\n";
    }
    out << "CHI " << D.declared_chi << "\n";
}

CurveDiagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open diagram file: " + path);
    return parse_diagram_text(in);
}

void write_diagram_file(const CurveDiagram& D, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write diagram file: " + path);
    print_diagram_text(D, out);
}

// ------------------------------------------------------------------- builder

int DiagramBuilder::add_vertex() { return n_vertices_++; }

std::pair<int, int> DiagramBuilder::add_edge(int u, int v, CurveLabel lab, bool forward_along) {
    int h = static_cast<int>(half_edges_.size());
    half_edges_.push_back(HalfEdge{u, h + 1, -1});
    half_edges_.push_back(HalfEdge{v, h, -1});
    label_.push_back(lab);
    label_.push_back(lab);
    along_.push_back(lab != CurveLabel::None && forward_along);
    along_.push_back(lab != CurveLabel::None && !forward_along);
    return {h, h + 1};
}

void DiagramBuilder::add_face(std::vector<int> walk) { faces_.push_back(std::move(walk)); }

DiagramBuilder::Result DiagramBuilder::build(CurveKind kind1, CurveKind kind2,
                                             int declared_chi) const {
    CurveDiagram D;
    D.num_vertices = n_vertices_;
    D.half_edges = half_edges_;
    D.label = label_;
    D.along = along_;
    D.kind[0] = kind1;
    D.kind[1] = kind2;
    D.declared_chi = declared_chi;

    std::vector<int> succ(half_edges_.size(), -1);  // walk successor = face orbit map
    std::vector<int> face_of_decl(half_edges_.size(), -1);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& walk = faces_[f];
        if (walk.empty()) throw std::logic_error("builder: empty face walk");
        for (std::size_t i = 0; i < walk.size(); ++i) {
            int h = walk[i];
            int g = walk[(i + 1) % walk.size()];
            int h_target = half_edges_[static_cast<std::size_t>(
                                           half_edges_[static_cast<std::size_t>(h)].twin)]
                               .origin;
            if (h_target != half_edges_[static_cast<std::size_t>(g)].origin)
                throw std::logic_error("builder: face walk is not a chain of half-edges");
            if (succ[static_cast<std::size_t>(h)] >= 0)
                throw std::logic_error("builder: half-edge appears in two walks");
            succ[static_cast<std::size_t>(h)] = g;
            face_of_decl[static_cast<std::size_t>(h)] = static_cast<int>(f);
        }
    }
    for (std::size_t h = 0; h < succ.size(); ++h)
        if (succ[h] < 0) throw std::logic_error("builder: half-edge missing from the face walks");
    // faces are orbits of next(twin(h)), so next(x) = successor of twin(x)
    for (std::size_t h = 0; h < succ.size(); ++h)
        D.half_edges[h].next = succ[static_cast<std::size_t>(D.half_edges[h].twin)];

    DiagramFaces F = compute_faces(D);
    Result res;
    res.diagram = D;
    res.face_ids.assign(faces_.size(), -1);
    for (std::size_t h = 0; h < succ.size(); ++h)
        res.face_ids[static_cast<std::size_t>(face_of_decl[h])] = F.face_of[h];
    return res;
}

}  // namespace ortholink
