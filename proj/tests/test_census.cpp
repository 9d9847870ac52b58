#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ortholink/census.hpp"
#include "oracle_helpers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace ortholink;

namespace {

std::vector<double> lengths_of(const LengthSpectrum& S) {
    std::vector<double> v;
    for (const ArcRecord& r : S.records) v.push_back(r.length);
    return v;
}

}  // namespace

TEST_CASE("point-point census: empty below the first orbit distance") {
    SurfaceGroup G = standard_genus2_group();
    auto S = census_point_point(G, {0, 1}, {0, 1}, 2.0);
    CHECK(S.records.empty());
    auto S0 = census_point_point(G, {0, 1}, {0, 1}, 0.0);
    CHECK(S0.records.empty());
}

TEST_CASE("point-point census at the basepoint sees the 8 generator displacements") {
    SurfaceGroup G = standard_genus2_group();
    auto S = census_point_point(G, {0, 1}, {0, 1}, 3.06);
    REQUIRE(S.records.size() == 8);
    for (const ArcRecord& r : S.records) {
        CHECK(r.length == doctest::Approx(3.0571418389619964).epsilon(1e-9));
        CHECK(r.start_sign == +1);
        CHECK(r.end_sign == +1);
    }
}

TEST_CASE("point-point census equals brute-force word enumeration at T = 6") {
    SurfaceGroup G = standard_genus2_group();
    HPoint q1{0.0, 1.0}, q2{0.15, 0.9};
    auto S = census_point_point(G, q1, q2, 6.0);
    HPoint p1 = reduce_to_fundamental_domain(G, q1);
    HPoint p2 = reduce_to_fundamental_domain(G, q2);
    std::vector<double> expected;
    for (const Isometry& g : oracle::brute_elements(G, 6)) {
        double len = dist(p1, g(p2));
        if (len > 0.0 && len <= 6.0) expected.push_back(len);
    }
    std::sort(expected.begin(), expected.end());
    auto got = lengths_of(S);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) < 1e-9);
}

TEST_CASE("point-point census symmetry is exact") {
    SurfaceGroup G = standard_genus2_group();
    HPoint q1{0.3, 1.2}, q2{-0.4, 0.8};
    auto A = lengths_of(census_point_point(G, q1, q2, 6.0));
    auto B = lengths_of(census_point_point(G, q2, q1, 6.0));
    REQUIRE(A.size() == B.size());
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    CHECK(std::equal(A.begin(), A.end(), B.begin()));  // bitwise
}

TEST_CASE("census is deck invariant") {
    SurfaceGroup G = standard_genus2_group();
    Isometry gamma = G.evaluate_word("ab");
    HPoint q1{0.1, 1.1}, q2{-0.2, 0.9};
    auto A = lengths_of(census_point_point(G, q1, q2, 5.5));
    auto B = lengths_of(census_point_point(G, gamma(q1), gamma(q2), 5.5));
    REQUIRE(A.size() == B.size());
    for (std::size_t i = 0; i < A.size(); ++i) CHECK(std::abs(A[i] - B[i]) < 1e-9);
}

TEST_CASE("geod-geod census: same geodesic below first perpendicular is empty") {
    SurfaceGroup G = standard_genus2_group();
    auto c = Representative::closed_geodesic(G.generator('a'));
    auto S = census_geod_geod(G, c, c, 0.5);
    CHECK(S.records.empty());
    CHECK(S.excluded_by_orientation == 0);
}

TEST_CASE("geod-geod census equals the brute-force double-coset filter") {
    SurfaceGroup G = standard_genus2_group();
    Isometry a = G.generator('a'), b = G.generator('b');
    auto c1 = Representative::closed_geodesic(a);
    auto c2 = Representative::closed_geodesic(b);

    auto S = census_geod_geod(G, c1, c2, 6.0);
    auto brute = oracle::brute_geod_geod(G, a, b, 6.0, 6);
    std::vector<double> expected;
    std::size_t brute_excluded = 0;
    for (const auto& arc : brute) {
        if (arc.start_sign == +1 && arc.end_sign == +1)
            expected.push_back(arc.length);
        else
            ++brute_excluded;
    }
    REQUIRE(S.records.size() == expected.size());
    CHECK(S.records.size() == 14);  // frozen oracle counts at T = 6
    CHECK(S.excluded_by_orientation == brute_excluded);
    CHECK(S.records.size() + S.excluded_by_orientation == 58);
    auto got = lengths_of(S);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) < 1e-9);
}

TEST_CASE("reversing c2 selects the complementary end signs") {
    SurfaceGroup G = standard_genus2_group();
    Isometry a = G.generator('a'), b = G.generator('b');
    double T = 5.0;
    std::size_t n_pp = 0, n_pm = 0;
    for (const CosetArc& arc : coset_arcs(G, a, b, T)) {
        if (arc.start_sign == +1 && arc.end_sign == +1) ++n_pp;
        if (arc.start_sign == +1 && arc.end_sign == -1) ++n_pm;
    }
    auto fwd = census_geod_geod(G, Representative::closed_geodesic(a),
                                Representative::closed_geodesic(b), T);
    auto rev = census_geod_geod(G, Representative::closed_geodesic(a),
                                Representative::closed_geodesic(b).reversed(), T);
    CHECK(fwd.records.size() == n_pp);
    CHECK(rev.records.size() == n_pm);
}

TEST_CASE("point-geod census: zero window is empty, signs split the total") {
    SurfaceGroup G = standard_genus2_group();
    auto c2 = Representative::closed_geodesic(G.generator('a'));
    auto S0 = census_point_geod(G, {0, 1}, c2, 0.0);
    CHECK(S0.records.empty());

    // at the octagon center the two sides of the curve are exchanged by a
    // symmetry of the configuration, so exactly half the perpendicular feet
    // arrive with the direct orientation
    auto S = census_point_geod(G, {0, 1}, c2, 6.0);
    CHECK(S.records.size() == 36);  // frozen; equals half of the 72 feet
    CHECK(S.excluded_by_orientation == 36);
    CHECK(S.records.size() == S.excluded_by_orientation);
}

TEST_CASE("point-geod census equals the brute-force left-coset filter") {
    SurfaceGroup G = standard_genus2_group();
    Isometry g2 = G.generator('b');
    auto c2 = Representative::closed_geodesic(g2);
    HPoint q{0.2, 1.15};
    double T = 5.0;
    auto S = census_point_geod(G, q, c2, T);

    HPoint p = reduce_to_fundamental_domain(G, q);
    GeodesicLine L2 = axis(g2);
    double reach = T + dist(G.basepoint, p) + point_to_line(G.basepoint, L2).distance +
                   0.5 * translation_length(g2) + 0.1;
    std::vector<Isometry> cands;
    std::vector<std::pair<double, int>> arcs;  // (length, end_sign)
    for (const Isometry& h : oracle::brute_elements(G, 6)) {
        if (G.displacement(h) > reach) continue;
        GeodesicLine lift = L2.apply(h);
        auto r = point_to_line(p, lift);
        if (!r.dir_defined || r.distance <= 0 || r.distance > T) continue;
        cands.push_back(h);
        arcs.emplace_back(r.distance,
                          side_sign(lift, r.foot, Vec2{-r.dir_at_foot.x, -r.dir_at_foot.y}));
    }
    // union-find on left cosets h<g2>
    oracle::CosetTester tester(Isometry(), g2);
    std::vector<std::size_t> parent(cands.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (find(i) != find(j) && tester.same(cands[i], cands[j])) parent[find(i)] = find(j);
    std::vector<double> expected;
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (find(i) == i) {
            if (arcs[i].second == +1)
                expected.push_back(arcs[i].first);
            else
                ++excluded;
        }
    std::sort(expected.begin(), expected.end());
    auto got = lengths_of(S);
    REQUIRE(got.size() == expected.size());
    CHECK(S.excluded_by_orientation == excluded);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) < 1e-9);
}

TEST_CASE("point-geod census is invariant under deck translates of the point") {
    SurfaceGroup G = standard_genus2_group();
    auto c2 = Representative::closed_geodesic(G.generator('a'));
    HPoint q{0.1, 1.4};
    Isometry gamma = G.evaluate_word("Ba");
    auto A = lengths_of(census_point_geod(G, q, c2, 5.0));
    auto B = lengths_of(census_point_geod(G, gamma(q), c2, 5.0));
    REQUIRE(A.size() == B.size());
    for (std::size_t i = 0; i < A.size(); ++i) CHECK(std::abs(A[i] - B[i]) < 1e-9);
}

TEST_CASE("counting function basics") {
    SurfaceGroup G = standard_genus2_group();
    LengthSpectrum empty;
    CHECK(counting_function(empty).jumps.empty());
    CHECK(counting_function(empty).value_at(3.0) == 0);

    auto S = census_point_point(G, {0, 1}, {0, 1}, 3.06);
    StepFunction N = counting_function(S);
    REQUIRE(N.jumps.size() == 1);
    CHECK(N.jumps[0].second == 8);  // 0 -> 8 at the first length
    CHECK(N.value_at(3.0) == 0);
    CHECK(N.value_at(3.06) == 8);
    CHECK(N.value_at(S.t_max) == S.records.size());
}

TEST_CASE("discreteness: distinct jump abscissae are separated") {
    SurfaceGroup G = standard_genus2_group();
    auto S = census_point_point(G, {0, 1}, {0.15, 0.9}, 6.0);
    StepFunction N = counting_function(S);
    for (std::size_t i = 1; i < N.jumps.size(); ++i)
        CHECK(N.jumps[i].first - N.jumps[i - 1].first > 1e-7);
}

TEST_CASE("window growth bound with h = 1.1") {
    SurfaceGroup G = standard_genus2_group();
    auto S = census_point_point(G, {0, 1}, {0, 1}, 9.0);
    StepFunction N = counting_function(S);
    double C = 0.0;
    for (double T = 4.0; T <= 8.0 + 1e-9; T += 0.1) {
        double wsum = static_cast<double>(N.value_at(T + 1.0 - 1e-12)) -
                      static_cast<double>(N.value_at(T - 1e-12));
        C = std::max(C, wsum / std::exp(1.1 * T));
    }
    CHECK(C > 0.0);
    CHECK(C < 1.0);  // the Margulis-scale constant stays modest
    for (double T = 4.0; T <= 8.0 + 1e-9; T += 0.037) {
        double wsum = static_cast<double>(N.value_at(T + 1.0 - 1e-12)) -
                      static_cast<double>(N.value_at(T - 1e-12));
        CHECK(wsum <= C * std::exp(1.1 * T) * (1.0 + 1e-12));
    }
}

TEST_CASE("spectrum CSV round trip") {
    SurfaceGroup G = standard_genus2_group();
    auto S = census_point_point(G, {0, 1}, {0.15, 0.9}, 5.5);
    std::ostringstream out;
    write_spectrum_csv(S, out);
    std::string text = out.str();
    CHECK(text.rfind("length,multiplicity,start_sign,end_sign\n", 0) == 0);
    std::istringstream in(text);
    LengthSpectrum R = read_spectrum_csv(in);
    REQUIRE(R.records.size() == S.records.size());
    for (std::size_t i = 0; i < R.records.size(); ++i)
        CHECK(std::abs(R.records[i].length - S.records[i].length) < 1e-9);

    std::ostringstream out2;
    write_spectrum_csv(S, out2);
    CHECK(out.str() == out2.str());  // deterministic bytes
}

TEST_CASE("genus-3 point census matches brute force at small radius") {
    SurfaceGroup G = standard_surface_group(3);
    double T = 1.2 * G.displacement(G.generators[0]);
    auto S = census_point_point(G, G.basepoint, {0.1, 1.05}, T);
    HPoint p2 = reduce_to_fundamental_domain(G, {0.1, 1.05});
    auto collect = [&](int maxlen) {
        std::vector<double> d;
        for (const Isometry& g : oracle::brute_elements(G, maxlen)) {
            double len = dist(G.basepoint, g(p2));
            if (len > 0.0 && len <= T) d.push_back(len);
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    std::vector<double> expected = collect(4);
    REQUIRE(expected.size() == collect(5).size());  // word enumeration has saturated
    REQUIRE(S.records.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(std::abs(S.records[i].length - expected[i]) < 1e-9);
}
