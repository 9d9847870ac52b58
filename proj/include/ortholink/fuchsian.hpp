#pragma once

// Cocompact surface groups acting on the upper half-plane: construction of
// the regular-4g-gon groups with canonical relator [a1,b1]...[ag,bg],
// complete displacement-ball enumeration with pruning, word recovery, and
// double-coset representatives classifying geodesic arcs.

#include "ortholink/halfplane.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ortholink {

struct RadiusTooLarge : std::runtime_error {
    explicit RadiusTooLarge(const std::string& what) : std::runtime_error(what) {}
};
struct NotInGroup : std::runtime_error {
    explicit NotInGroup(const std::string& what) : std::runtime_error(what) {}
};
struct NotPrimitive : std::runtime_error {
    explicit NotPrimitive(const std::string& what) : std::runtime_error(what) {}
};

struct SurfaceGroup {
    std::vector<char> gen_names;       // single lowercase letters
    std::vector<Isometry> generators;  // parallel to gen_names
    std::string relator;               // uppercase letter = inverse generator
    int genus = 2;
    HPoint basepoint{0.0, 1.0};

    const Isometry& generator(char name) const;
    Isometry evaluate_word(std::string_view word) const;
    double displacement(const Isometry& g) const;  // dist(o, g o)
    double max_gen_displacement() const;
    // circumradius of the regular 4g-gon Dirichlet domain at the basepoint;
    // this is the completeness margin needed by enumerate_ball
    double dirichlet_circumradius() const;
};

// Regular hyperbolic 4g-gon with interior angles pi/(2g) and the canonical
// side pairing; all generators share one translation length and one
// basepoint displacement.  genus >= 2.
SurfaceGroup standard_surface_group(int genus);
inline SurfaceGroup standard_genus2_group() { return standard_surface_group(2); }

// text format: lines `gen <name> <a> <b> <c> <d>`, `relator <word>`,
// `basepoint <x> <y>`, `genus <n>`; '#' starts a comment
SurfaceGroup parse_group_text(std::istream& in);
void print_group_text(const SurfaceGroup& G, std::ostream& out);
SurfaceGroup read_group_file(const std::string& path);
void write_group_file(const SurfaceGroup& G, const std::string& path);

// letters ordered a < A < b < B < ...; words by length then letter rank
bool word_less(std::string_view lhs, std::string_view rhs);

struct BallElement {
    Isometry g;
    double displacement = 0.0;
    std::string word;  // minimal witness, lexicographic tie-break
};

struct GroupBall {
    double radius = 0.0;
    std::vector<BallElement> elements;  // sorted by (displacement, word)
};

struct BallOptions {
    std::size_t cap = 10'000'000;  // RadiusTooLarge when the projection exceeds it
    double margin = -1.0;          // exploration margin; < 0 = circumradius + 0.1
};

// Complete set { g : dist(o, g o) <= R }, each element once in canonical
// form with its word witness.  Completeness comes from expanding every
// element with displacement <= R + margin: any target element is connected
// to the identity through tiles met by the geodesic from o to g o, whose
// centers stay within the Dirichlet circumradius of that geodesic.
GroupBall enumerate_ball(const SurfaceGroup& G, double R, const BallOptions& opt = {});

// Word recovery by displacement descent; nullopt when no word of length
// <= max_len reproduces g (membership failure for group-sized inputs).
std::optional<std::string> find_word(const SurfaceGroup& G, const Isometry& g, int max_len = 64);

// true when no k in the group with k^p = g (p >= 2) exists; ball-checked
bool is_primitive(const SurfaceGroup& G, const Isometry& g, const BallOptions& opt = {});

// One geodesic arc per double coset <g1>\Gamma/<g2> whose common
// perpendicular between axis(g1) and rep * axis(g2) has length <= R.
struct CosetArc {
    Isometry rep;
    std::string word;
    PerpSegment perp;          // oriented from axis(g1) to rep * axis(g2)
    int start_sign = +1;       // side_sign of the departure direction vs axis(g1)
    int end_sign = +1;         // side_sign of the arrival direction vs the translated axis(g2)
    double foot1_coord = 0.0;  // arclength of foot1 along axis(g1), reduced mod ell(g1)
};

std::vector<CosetArc> coset_arcs(const SurfaceGroup& G, const Isometry& g1, const Isometry& g2,
                                 double R, const BallOptions& opt = {}, int threads = 1);

std::vector<Isometry> double_coset_reps(const SurfaceGroup& G, const Isometry& g1,
                                        const Isometry& g2, double R,
                                        const BallOptions& opt = {});

}  // namespace ortholink
