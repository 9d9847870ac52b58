#pragma once

// Ready-made genus-2 curve diagrams: the point/loop configurations whose
// exact values calibrate the linking formulas, plus random topology-
// preserving subdivisions for property testing.

#include "ortholink/euler_link.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ortholink {

// two bare points in distinct faces of a genus-2 surface
CurveDiagram fixture_distinct_points();

// two bare points marking the same face (the coincident-point case)
CurveDiagram fixture_coincident_points();

// a point together with the push-off circle of a coincident point: C1 is the
// contractible circle bounding the disk that carries the C2 point
CurveDiagram fixture_same_point_pushoff();

// separating loop (one-holed torus on its left) and a contractible circle
// whose disk lies inside that side
CurveDiagram fixture_separating_loop_and_circle();

// separating loop with a bare point on the other side
CurveDiagram fixture_separating_loop();

// figure-eight curve (two lobes, matching orientations, two double points)
// with a bare point outside
CurveDiagram fixture_figure_eight();

// two nested contractible circles in one handle-free region
CurveDiagram fixture_nested_circles();

// two contractible circles crossing transversally twice
CurveDiagram fixture_crossing_circles();

// two contractible circles in disjoint disks
CurveDiagram fixture_disjoint_circles();

// two contractible curves crossing transversally four times
CurveDiagram fixture_four_crossings();

// two disjoint parallel circles bounding an annulus, labeled as one curve
CurveDiagram fixture_annulus_curve();

// a homologically nontrivial loop labeled as C2 (constructible_function must
// refuse it)
CurveDiagram fixture_nonseparating_loop();

std::vector<std::string> fixture_names();
CurveDiagram fixture_by_name(const std::string& name);

// n_ops random edge subdivisions and face chord insertions; preserves the
// surface, the curves and every linking invariant
CurveDiagram random_subdivide(const CurveDiagram& D, std::uint64_t seed, int n_ops);

}  // namespace ortholink
