#include "ortholink/fuchsian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <deque>
#include <queue>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace ortholink {

namespace {

using cplx = std::complex<double>;

struct CMat {
    cplx a, b, c, d;
    CMat operator*(const CMat& r) const {
        return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
    }
    CMat inverse() const {
        cplx det = a * d - b * c;
        return {d / det, -b / det, -c / det, a / det};
    }
    cplx mobius(cplx z) const { return (a * z + b) / (c * z + d); }
};

CMat disk_translate(cplx p) { return {1.0, -p, -std::conj(p), 1.0}; }

CMat disk_rotate(double theta) {
    return {std::polar(1.0, theta / 2), 0.0, 0.0, std::polar(1.0, -theta / 2)};
}

// unique orientation-preserving disk isometry with p1 -> q1, p2 -> q2
CMat disk_iso_two_points(cplx p1, cplx p2, cplx q1, cplx q2) {
    CMat M1 = disk_translate(p1);
    M1 = disk_rotate(-std::arg(M1.mobius(p2))) * M1;
    CMat M2 = disk_translate(q1);
    M2 = disk_rotate(-std::arg(M2.mobius(q2))) * M2;
    return M2.inverse() * M1;
}

// conjugate a disk isometry to the upper half-plane (0 -> i) and strip the phase
Isometry to_halfplane(const CMat& M) {
    static const CMat C{cplx(0, 1), cplx(0, 1), cplx(-1, 0), cplx(1, 0)};
    static const CMat Ci = C.inverse();
    CMat H = C * M * Ci;
    cplx det = H.a * H.d - H.b * H.c;
    cplx s = 1.0 / std::sqrt(det);
    H = {H.a * s, H.b * s, H.c * s, H.d * s};
    const cplx entries[4] = {H.a, H.b, H.c, H.d};
    cplx big = entries[0];
    for (const cplx& e : entries)
        if (std::abs(e) > std::abs(big)) big = e;
    cplx phase = big / std::abs(big);
    H = {H.a / phase, H.b / phase, H.c / phase, H.d / phase};
    double imag = std::max({std::abs(H.a.imag()), std::abs(H.b.imag()), std::abs(H.c.imag()),
                            std::abs(H.d.imag())});
    if (imag > 1e-9)
        throw std::runtime_error("disk isometry did not conjugate to a real matrix");
    return Isometry(H.a.real(), H.b.real(), H.c.real(), H.d.real());
}

int letter_rank(char ch) {
    return 2 * (std::tolower(static_cast<unsigned char>(ch)) - 'a') +
           (std::isupper(static_cast<unsigned char>(ch)) ? 1 : 0);
}

}  // namespace

// -------------------------------------------------------------- SurfaceGroup

const Isometry& SurfaceGroup::generator(char name) const {
    for (std::size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == name) return generators[i];
    throw std::invalid_argument(std::string("unknown generator '") + name + "'");
}

Isometry SurfaceGroup::evaluate_word(std::string_view word) const {
    Isometry g;
    for (char ch : word) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        const Isometry& gen = generator(low);
        g = g * (std::isupper(static_cast<unsigned char>(ch)) ? gen.inverse() : gen);
    }
    return g;
}

double SurfaceGroup::displacement(const Isometry& g) const { return dist(basepoint, g(basepoint)); }

double SurfaceGroup::max_gen_displacement() const {
    double m = 0.0;
    for (const Isometry& g : generators) m = std::max(m, displacement(g));
    return m;
}

double SurfaceGroup::dirichlet_circumradius() const {
    double cot = 1.0 / std::tan(M_PI / (4.0 * genus));
    return std::acosh(cot * cot);
}

SurfaceGroup standard_surface_group(int genus) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    int n = 4 * genus;
    double cot = 1.0 / std::tan(M_PI / n);
    double cosh_R = cot * cot;
    double rho = std::sqrt((cosh_R - 1.0) / (cosh_R + 1.0));
    std::vector<cplx> V(n);
    for (int k = 0; k < n; ++k) V[k] = std::polar(rho, 2.0 * M_PI * k / n);

    auto pair_map = [&](int k, int m) {
        return disk_iso_two_points(V[(m + 1) % n], V[m % n], V[k % n], V[(k + 1) % n]);
    };

    SurfaceGroup G;
    G.genus = genus;
    G.basepoint = {0.0, 1.0};
    for (int blk = 0; blk < genus; ++blk) {
        int s = 4 * blk;
        char na = static_cast<char>('a' + 2 * blk);
        char nb = static_cast<char>('a' + 2 * blk + 1);
        G.gen_names.push_back(na);
        G.generators.push_back(to_halfplane(pair_map(s, s + 2)));
        G.gen_names.push_back(nb);
        G.generators.push_back(to_halfplane(pair_map(s + 1, s + 3).inverse()));
        G.relator += na;
        G.relator += nb;
        G.relator += static_cast<char>(std::toupper(static_cast<unsigned char>(na)));
        G.relator += static_cast<char>(std::toupper(static_cast<unsigned char>(nb)));
    }
    return G;
}

// ------------------------------------------------------------------- file IO

SurfaceGroup parse_group_text(std::istream& in) {
    SurfaceGroup G;
    G.gen_names.clear();
    G.generators.clear();
    bool saw_genus = false, saw_basepoint = false, saw_relator = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("group file line " + std::to_string(lineno) + ": " + msg);
        };
        if (key == "gen") {
            std::string name;
            double a, b, c, d;
            if (!(ss >> name >> a >> b >> c >> d)) fail("expected `gen <name> <a> <b> <c> <d>`");
            if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0])))
                fail("generator names are single lowercase letters");
            G.gen_names.push_back(name[0]);
            G.generators.push_back(Isometry(a, b, c, d));
        } else if (key == "relator") {
            if (!(ss >> G.relator)) fail("expected `relator <word>`");
            saw_relator = true;
        } else if (key == "basepoint") {
            if (!(ss >> G.basepoint.x >> G.basepoint.y)) fail("expected `basepoint <x> <y>`");
            if (G.basepoint.y <= 0) fail("basepoint must lie in the upper half-plane");
            saw_basepoint = true;
        } else if (key == "genus") {
            if (!(ss >> G.genus)) fail("expected `genus <n>`");
            saw_genus = true;
        } else {
            fail("unknown key `" + key + "`");
        }
    }
    if (G.generators.empty() || !saw_relator || !saw_basepoint || !saw_genus)
        throw std::runtime_error("group file must contain gen, relator, basepoint and genus lines");
    if (G.genus < 2) throw std::runtime_error("group file: genus must be >= 2");
    for (const Isometry& g : G.generators)
        if (!g.is_hyperbolic()) throw std::runtime_error("group file: generators must be hyperbolic");
    Isometry rel = G.evaluate_word(G.relator);
    if (rel.max_abs_entry_diff(Isometry()) > 1e-8)
        throw std::runtime_error("group file: relator does not evaluate to +-identity");
    return G;
}

void print_group_text(const SurfaceGroup& G, std::ostream& out) {
    out << "# ortholink surface group\n";
    out << "genus " << G.genus << "\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "basepoint %.17g %.17g\n", G.basepoint.x, G.basepoint.y);
    out << buf;
    for (std::size_t i = 0; i < G.generators.size(); ++i) {
        const Isometry& g = G.generators[i];
        std::snprintf(buf, sizeof buf, "gen %c %.17g %.17g %.17g %.17g\n", G.gen_names[i], g.a(),
                      g.b(), g.c(), g.d());
        out << buf;
    }
    out << "relator " << G.relator << "\n";
}

SurfaceGroup read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    return parse_group_text(in);
}

void write_group_file(const SurfaceGroup& G, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write group file: " + path);
    print_group_text(G, out);
}

bool word_less(std::string_view lhs, std::string_view rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != rhs[i]) return letter_rank(lhs[i]) < letter_rank(rhs[i]);
    return false;
}

// ------------------------------------------------------------ enumerate_ball

namespace {

struct MatKey {
    std::int64_t k[4];
    bool operator==(const MatKey& o) const {
        return k[0] == o.k[0] && k[1] == o.k[1] && k[2] == o.k[2] && k[3] == o.k[3];
    }
};

struct MatKeyHash {
    std::size_t operator()(const MatKey& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < 4; ++i) {
            h ^= static_cast<std::uint64_t>(m.k[i]);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

constexpr double kGridInv = 1e6;  // dedup grid 1e-6

MatKey center_key(const Isometry& g) {
    return {{static_cast<std::int64_t>(std::floor(g.a() * kGridInv)),
             static_cast<std::int64_t>(std::floor(g.b() * kGridInv)),
             static_cast<std::int64_t>(std::floor(g.c() * kGridInv)),
             static_cast<std::int64_t>(std::floor(g.d() * kGridInv))}};
}

struct Visited {
    Isometry g;
    double displacement;
    std::int32_t parent;  // -1 for identity
    char letter;
};

// probe all grid cells within half a bin of each entry so that float copies
// of one element always collide while distinct elements (>= 1e-5 apart) never do
template <typename Fn>
void probe_keys(const Isometry& g, Fn&& fn) {
    const double e[4] = {g.a(), g.b(), g.c(), g.d()};
    std::int64_t lo[4], hi[4];
    for (int i = 0; i < 4; ++i) {
        lo[i] = static_cast<std::int64_t>(std::floor(e[i] * kGridInv - 0.5));
        hi[i] = static_cast<std::int64_t>(std::floor(e[i] * kGridInv + 0.5));
    }
    MatKey key;
    for (std::int64_t k0 = lo[0]; k0 <= hi[0]; ++k0)
        for (std::int64_t k1 = lo[1]; k1 <= hi[1]; ++k1)
            for (std::int64_t k2 = lo[2]; k2 <= hi[2]; ++k2)
                for (std::int64_t k3 = lo[3]; k3 <= hi[3]; ++k3) {
                    key = {{k0, k1, k2, k3}};
                    if (!fn(key)) return;
                }
}

std::string word_of(const std::vector<Visited>& nodes, std::int32_t idx) {
    std::string w;
    while (idx >= 0 && nodes[idx].parent >= 0) {
        w.push_back(nodes[idx].letter);
        idx = nodes[idx].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

GroupBall enumerate_ball(const SurfaceGroup& G, double R, const BallOptions& opt) {
    if (R < 0) throw std::invalid_argument("enumerate_ball: negative radius");
    double margin = opt.margin >= 0 ? opt.margin : G.dirichlet_circumradius() + 0.1;
    double threshold = R + margin;
    double abs_chi = 2.0 * G.genus - 2.0;
    double projected = std::exp(threshold) / (2.0 * abs_chi) * 1.3 + 64.0;
    if (projected > static_cast<double>(opt.cap))
        throw RadiusTooLarge("enumerate_ball: projected element count " +
                             std::to_string(static_cast<std::size_t>(projected)) +
                             " exceeds cap " + std::to_string(opt.cap));

    // letters in canonical order a, A, b, B, ... so that the BFS discovers
    // every element through its lexicographically least shortest word
    std::vector<std::pair<char, Isometry>> letters;
    for (std::size_t i = 0; i < G.generators.size(); ++i) {
        letters.emplace_back(G.gen_names[i], G.generators[i]);
        letters.emplace_back(
            static_cast<char>(std::toupper(static_cast<unsigned char>(G.gen_names[i]))),
            G.generators[i].inverse());
    }

    std::vector<Visited> nodes;
    std::unordered_map<MatKey, std::int32_t, MatKeyHash> index;
    nodes.push_back({Isometry(), 0.0, -1, 0});
    index.emplace(center_key(Isometry()), 0);

    double min_dropped = std::numeric_limits<double>::infinity();
    std::deque<std::int32_t> queue{0};
    while (!queue.empty()) {
        std::int32_t cur = queue.front();
        queue.pop_front();
        Isometry base = nodes[cur].g;
        for (const auto& [letter, gen] : letters) {
            Isometry child = base * gen;
            double disp = G.displacement(child);
            if (disp > threshold) {
                min_dropped = std::min(min_dropped, disp);
                continue;
            }
            bool known = false;
            probe_keys(child, [&](const MatKey& key) {
                auto it = index.find(key);
                if (it != index.end() && nodes[it->second].g.max_abs_entry_diff(child) < 1e-6) {
                    known = true;
                    return false;
                }
                return true;
            });
            if (known) continue;
            if (nodes.size() >= opt.cap)
                throw RadiusTooLarge("enumerate_ball: element cap reached");
            std::int32_t id = static_cast<std::int32_t>(nodes.size());
            nodes.push_back({child, disp, cur, letter});
            index.emplace(center_key(child), id);
            queue.push_back(id);
        }
    }

    // proof of coverage: everything left unexplored exceeds R + margin
    if (min_dropped <= threshold)
        throw std::logic_error("enumerate_ball: frontier element within the exploration radius");

    GroupBall ball;
    ball.radius = R;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(nodes.size()); ++i)
        if (nodes[i].displacement <= R + 1e-12)
            ball.elements.push_back({nodes[i].g, nodes[i].displacement, word_of(nodes, i)});

    // closure under exact inversion: rewrite the bits of each element's
    // inverse partner as the exact adjugate, so that inverse pairs match
    // bit for bit downstream
    {
        std::unordered_map<MatKey, std::size_t, MatKeyHash> out_index;
        for (std::size_t i = 0; i < ball.elements.size(); ++i)
            out_index.emplace(center_key(ball.elements[i].g), i);
        // tolerant comparison so that float noise cannot make both members of
        // an inverse pair claim the keeper side; an all-tie (near-involutive
        // element) makes both act, and the second overwrite is a no-op
        auto lex_leq = [](const Isometry& x, const Isometry& y) {
            const double t = 1e-9;
            const double d[4] = {x.a() - y.a(), x.b() - y.b(), x.c() - y.c(), x.d() - y.d()};
            for (double v : d) {
                if (v < -t) return true;
                if (v > t) return false;
            }
            return true;
        };
        for (std::size_t i = 0; i < ball.elements.size(); ++i) {
            Isometry adj = ball.elements[i].g.adjugate();
            if (!lex_leq(ball.elements[i].g, adj)) continue;
            std::size_t partner = ball.elements.size();
            probe_keys(adj, [&](const MatKey& key) {
                auto it = out_index.find(key);
                if (it != out_index.end() &&
                    ball.elements[it->second].g.max_abs_entry_diff(adj) < 1e-6) {
                    partner = it->second;
                    return false;
                }
                return true;
            });
            if (partner < ball.elements.size() && partner != i) {
                ball.elements[partner].g = adj;
                ball.elements[partner].displacement = G.displacement(adj);
            }
        }
    }

    std::sort(ball.elements.begin(), ball.elements.end(),
              [](const BallElement& x, const BallElement& y) {
                  if (x.displacement != y.displacement) return x.displacement < y.displacement;
                  return word_less(x.word, y.word);
              });
    return ball;
}

// ----------------------------------------------------------------- find_word

std::optional<std::string> find_word(const SurfaceGroup& G, const Isometry& g, int max_len) {
    // bidirectional A* through the tiling: a forward search grows prefixes
    // from the identity toward g while a backward search peels suffixes off
    // g; they meet near half the displacement, which keeps the explored
    // corridor near e^{disp/2} instead of e^{disp}
    std::vector<std::pair<char, Isometry>> letters;
    for (std::size_t i = 0; i < G.generators.size(); ++i) {
        letters.emplace_back(G.gen_names[i], G.generators[i]);
        letters.emplace_back(
            static_cast<char>(std::toupper(static_cast<unsigned char>(G.gen_names[i]))),
            G.generators[i].inverse());
    }
    double mgd = G.max_gen_displacement();
    HPoint target = g(G.basepoint);

    struct Node {
        Isometry u;
        std::int32_t parent;
        char letter;
        int depth;
    };
    struct Side {
        std::vector<Node> nodes;
        std::unordered_map<MatKey, std::int32_t, MatKeyHash> index;
        std::priority_queue<std::pair<double, std::int32_t>,
                            std::vector<std::pair<double, std::int32_t>>, std::greater<>>
            queue;
    };
    Side fwd, bwd;  // fwd states: eval(prefix); bwd states: g * eval(suffix)^{-1}
    auto heuristic = [&](const Isometry& u, bool forward) {
        return dist(u(G.basepoint), forward ? target : G.basepoint) / mgd;
    };
    auto push_root = [&](Side& side, const Isometry& root, bool forward) {
        side.nodes.push_back({root, -1, 0, 0});
        side.index.emplace(center_key(root), 0);
        side.queue.emplace(heuristic(root, forward), 0);
    };
    push_root(fwd, Isometry(), true);
    push_root(bwd, g, false);

    auto lookup = [&](Side& side, const Isometry& u) -> std::int32_t {
        std::int32_t found = -1;
        probe_keys(u, [&](const MatKey& key) {
            auto it = side.index.find(key);
            if (it != side.index.end() &&
                side.nodes[static_cast<std::size_t>(it->second)].u.max_abs_entry_diff(u) < 1e-6) {
                found = it->second;
                return false;
            }
            return true;
        });
        return found;
    };
    auto word_to = [&](const Side& side, std::int32_t id) {
        std::string w;
        for (std::int32_t n = id; n >= 0 && side.nodes[static_cast<std::size_t>(n)].parent >= 0;
             n = side.nodes[static_cast<std::size_t>(n)].parent)
            w.push_back(side.nodes[static_cast<std::size_t>(n)].letter);
        std::reverse(w.begin(), w.end());
        return w;
    };
    auto assemble = [&](std::int32_t fwd_id, std::int32_t bwd_id) -> std::optional<std::string> {
        std::string prefix = word_to(fwd, fwd_id);
        std::string suffix = word_to(bwd, bwd_id);  // letters were appended walking from g
        // backward letters were prepended to the suffix, so reading the path
        // from the meeting point back to g gives the suffix in order
        std::reverse(suffix.begin(), suffix.end());
        std::string word = prefix + suffix;
        if (static_cast<int>(word.size()) > max_len) return std::nullopt;
        return word;
    };

    const std::size_t budget = 400000;
    while ((!fwd.queue.empty() || !bwd.queue.empty()) &&
           fwd.nodes.size() + bwd.nodes.size() < budget) {
        bool forward;
        if (fwd.queue.empty())
            forward = false;
        else if (bwd.queue.empty())
            forward = true;
        else
            forward = fwd.queue.top().first <= bwd.queue.top().first;
        Side& mine = forward ? fwd : bwd;
        Side& other = forward ? bwd : fwd;
        std::int32_t cur = mine.queue.top().second;
        mine.queue.pop();
        if (mine.nodes[static_cast<std::size_t>(cur)].depth >= max_len) continue;
        for (const auto& [letter, gen] : letters) {
            Isometry u = forward ? mine.nodes[static_cast<std::size_t>(cur)].u * gen
                                 : mine.nodes[static_cast<std::size_t>(cur)].u * gen.inverse();
            if (lookup(mine, u) >= 0) continue;
            std::int32_t id = static_cast<std::int32_t>(mine.nodes.size());
            mine.nodes.push_back(
                {u, cur, letter, mine.nodes[static_cast<std::size_t>(cur)].depth + 1});
            mine.index.emplace(center_key(u), id);
            std::int32_t hit = lookup(other, u);
            if (hit >= 0) {
                auto word = forward ? assemble(id, hit) : assemble(hit, id);
                if (word) return word;
            }
            mine.queue.emplace(
                static_cast<double>(mine.nodes.back().depth) + heuristic(u, forward), id);
        }
    }
    return std::nullopt;
}

bool is_primitive(const SurfaceGroup& G, const Isometry& g, const BallOptions& opt) {
    if (!g.is_hyperbolic()) throw NotHyperbolic("is_primitive: element is not hyperbolic");
    double ell = translation_length(g);
    GeodesicLine ax = axis(g);
    GroupBall ball = enumerate_ball(G, G.displacement(g) + 0.01, opt);
    for (const BallElement& el : ball.elements) {
        if (!el.g.is_hyperbolic()) continue;
        double lk = translation_length(el.g);
        if (lk >= ell - 1e-7) continue;
        if (!axis(el.g).same_unoriented(ax, 1e-7)) continue;
        int p = static_cast<int>(std::lround(ell / lk));
        if (p < 2 || p > 64) continue;
        Isometry pw;
        for (int i = 0; i < p; ++i) pw = pw * el.g;
        if (pw.max_abs_entry_diff(g) < 1e-6) return false;
    }
    return true;
}

// ---------------------------------------------------------------- coset_arcs

std::vector<CosetArc> coset_arcs(const SurfaceGroup& G, const Isometry& g1, const Isometry& g2,
                                 double R, const BallOptions& opt, int threads) {
    if (!g1.is_hyperbolic() || !g2.is_hyperbolic())
        throw NotHyperbolic("coset_arcs: representatives must be hyperbolic");
    if (!find_word(G, g1) || !find_word(G, g2))
        throw NotInGroup("coset_arcs: representative has no word witness");
    if (!is_primitive(G, g1, opt) || !is_primitive(G, g2, opt))
        throw NotPrimitive("coset_arcs: representative is not primitive");
    if (R < 0) return {};

    GeodesicLine L1 = axis(g1), L2 = axis(g2);
    double ell1 = translation_length(g1), ell2 = translation_length(g2);
    double d1 = point_to_line(G.basepoint, L1).distance;
    double d2 = point_to_line(G.basepoint, L2).distance;
    double reach = R + (d1 + 0.5 * ell1) + (d2 + 0.5 * ell2) + 0.1;
    GroupBall ball = enumerate_ball(G, reach, opt);

    struct Candidate {
        double smod;
        int start_sign, end_sign;
        double length;
        std::string word;
        Isometry rep;
        PerpSegment perp;
    };

    auto process = [&](std::size_t begin, std::size_t end, std::vector<Candidate>& out) {
        for (std::size_t i = begin; i < end; ++i) {
            const BallElement& el = ball.elements[i];
            GeodesicLine lift = L2.apply(el.g);
            if (lift.same_unoriented(L1)) continue;  // shared axis: skipped
            auto perp = common_perpendicular(L1, lift);
            if (!perp || perp->length > R) continue;
            Candidate c;
            c.length = perp->length;
            c.start_sign = side_sign(L1, perp->foot1, perp->dir1);
            c.end_sign = side_sign(lift, perp->foot2, perp->dir2);
            double s = std::fmod(L1.arclength_coord(perp->foot1), ell1);
            if (s < 0) s += ell1;
            c.smod = s;
            c.word = el.word;
            c.rep = el.g;
            c.perp = *perp;
            out.push_back(std::move(c));
        }
    };

    std::vector<Candidate> cands;
    if (threads <= 1) {
        process(0, ball.elements.size(), cands);
    } else {
        std::vector<std::vector<Candidate>> parts(threads);
        std::vector<std::thread> pool;
        std::size_t n = ball.elements.size();
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(
                [&, t] { process(n * t / threads, n * (t + 1) / threads, parts[t]); });
        for (auto& th : pool) th.join();
        for (auto& p : parts)
            for (auto& c : p) cands.push_back(std::move(c));
    }

    // one arc per double coset: the departure side, the foot position mod
    // ell1 and the length identify the arc; keep the minimal word witness
    const double tol = 1e-7;
    auto same_arc = [&](const Candidate& x, const Candidate& y) {
        double ds = std::abs(x.smod - y.smod);
        ds = std::min(ds, ell1 - ds);  // circular coordinate
        return ds <= tol && x.start_sign == y.start_sign && std::abs(x.length - y.length) <= tol;
    };
    std::vector<Candidate> kept;
    for (int sign : {-1, +1}) {
        std::vector<Candidate> part;
        for (Candidate& c : cands)
            if (c.start_sign == sign) part.push_back(std::move(c));
        std::sort(part.begin(), part.end(), [](const Candidate& x, const Candidate& y) {
            if (x.smod != y.smod) return x.smod < y.smod;
            if (x.length != y.length) return x.length < y.length;
            return word_less(x.word, y.word);
        });
        std::size_t first_group = kept.size();
        for (std::size_t i = 0; i < part.size();) {
            std::size_t j = i, best = i;
            while (j < part.size() && same_arc(part[i], part[j])) {
                if (word_less(part[j].word, part[best].word)) best = j;
                ++j;
            }
            kept.push_back(part[best]);
            i = j;
        }
        // the coordinate is circular: groups hugging 0 and ell1 coincide
        if (kept.size() - first_group >= 2 && same_arc(kept[first_group], kept.back())) {
            if (word_less(kept.back().word, kept[first_group].word))
                kept[first_group] = kept.back();
            kept.pop_back();
        }
    }
    std::vector<CosetArc> arcs;
    for (const Candidate& c : kept) {
        CosetArc arc;
        arc.rep = c.rep;
        arc.word = c.word;
        arc.perp = c.perp;
        arc.start_sign = c.start_sign;
        arc.end_sign = c.end_sign;
        arc.foot1_coord = c.smod;
        arcs.push_back(std::move(arc));
    }
    std::sort(arcs.begin(), arcs.end(), [](const CosetArc& x, const CosetArc& y) {
        if (x.perp.length != y.perp.length) return x.perp.length < y.perp.length;
        if (x.foot1_coord != y.foot1_coord) return x.foot1_coord < y.foot1_coord;
        return word_less(x.word, y.word);
    });
    return arcs;
}

std::vector<Isometry> double_coset_reps(const SurfaceGroup& G, const Isometry& g1,
                                        const Isometry& g2, double R, const BallOptions& opt) {
    std::vector<Isometry> reps;
    for (const CosetArc& arc : coset_arcs(G, g1, g2, R, opt)) reps.push_back(arc.rep);
    return reps;
}

}  // namespace ortholink
