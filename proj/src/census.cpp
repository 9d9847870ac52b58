#include "ortholink/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ortholink {

namespace {

constexpr double kMergeTol = 1e-7;  // multiplicity merge tolerance

void sort_records(std::vector<ArcRecord>& records) {
    std::sort(records.begin(), records.end(), [](const ArcRecord& x, const ArcRecord& y) {
        if (x.length != y.length) return x.length < y.length;
        if (x.start_sign != y.start_sign) return x.start_sign < y.start_sign;
        if (x.end_sign != y.end_sign) return x.end_sign < y.end_sign;
        return word_less(x.word, y.word);
    });
}

// tangent at p of the geodesic through p and q, pointing toward q (hyperbolic unit)
Vec2 direction_toward(const HPoint& p, const HPoint& q) {
    if (std::abs(p.x - q.x) < 1e-14) {
        double s = (q.y > p.y) ? 1.0 : -1.0;
        return {0.0, s * p.y};
    }
    double c = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
    Vec2 t{p.y, c - p.x};  // tangent of the circle centered (c, 0)
    double en = std::hypot(t.x, t.y);
    t = {t.x / en * p.y, t.y / en * p.y};
    // orient toward q: along the circle, x increases monotonically toward q
    // iff q.x > p.x
    if ((q.x > p.x) != (t.x > 0)) t = {-t.x, -t.y};
    return t;
}

}  // namespace

HPoint reduce_to_fundamental_domain(const SurfaceGroup& G, HPoint q) {
    std::vector<Isometry> letters;
    for (const Isometry& g : G.generators) {
        letters.push_back(g);
        letters.push_back(g.inverse());
    }
    bool moved = true;
    while (moved) {
        moved = false;
        double cur = dist(G.basepoint, q);
        for (const Isometry& g : letters) {
            HPoint cand = g(q);
            if (dist(G.basepoint, cand) < cur - 1e-12) {
                q = cand;
                moved = true;
                break;
            }
        }
    }
    return q;
}

LengthSpectrum census_point_point(const SurfaceGroup& G, const HPoint& q1, const HPoint& q2,
                                  double T, const CensusOptions& opt) {
    if (T < 0) throw std::invalid_argument("census: negative t_max");
    HPoint p1 = reduce_to_fundamental_domain(G, q1);
    HPoint p2 = reduce_to_fundamental_domain(G, q2);
    LengthSpectrum S;
    S.t_max = T;
    S.rep1 = Representative::point_at(q1);
    S.rep2 = Representative::point_at(q2);
    double reach = T + dist(G.basepoint, p1) + dist(G.basepoint, p2) + 1e-9;
    BallOptions bopt;
    bopt.cap = opt.cap;
    GroupBall ball = enumerate_ball(G, reach, bopt);
    for (const BallElement& el : ball.elements) {
        // evaluate symmetrically so census(q1,q2) and census(q2,q1) agree
        // exactly record for record (g versus g^{-1})
        double len = std::min(dist(p1, el.g(p2)), dist(p2, el.g.adjugate()(p1)));
        if (len <= 0.0 || len > T) continue;
        ArcRecord rec;
        rec.length = len;
        rec.coset_witness = el.g;
        rec.word = el.word;
        S.records.push_back(std::move(rec));
    }
    sort_records(S.records);
    return S;
}

LengthSpectrum census_geod_geod(const SurfaceGroup& G, const Representative& c1,
                                const Representative& c2, double T, const CensusOptions& opt) {
    if (c1.kind != Representative::Kind::ClosedGeodesic ||
        c2.kind != Representative::Kind::ClosedGeodesic)
        throw std::invalid_argument("census_geod_geod: both representatives must be geodesics");
    if (T < 0) throw std::invalid_argument("census: negative t_max");
    LengthSpectrum S;
    S.t_max = T;
    S.rep1 = c1;
    S.rep2 = c2;
    BallOptions bopt;
    bopt.cap = opt.cap;
    for (const CosetArc& arc : coset_arcs(G, c1.element, c2.element, T, bopt, opt.threads)) {
        if (arc.start_sign == +1 && arc.end_sign == +1) {
            ArcRecord rec;
            rec.length = arc.perp.length;
            rec.coset_witness = arc.rep;
            rec.start_sign = arc.start_sign;
            rec.end_sign = arc.end_sign;
            rec.word = arc.word;
            S.records.push_back(std::move(rec));
        } else {
            ++S.excluded_by_orientation;
        }
    }
    sort_records(S.records);
    return S;
}

LengthSpectrum census_point_geod(const SurfaceGroup& G, const HPoint& q,
                                 const Representative& c2, double T, const CensusOptions& opt) {
    if (c2.kind != Representative::Kind::ClosedGeodesic)
        throw std::invalid_argument("census_point_geod: second representative must be a geodesic");
    if (T < 0) throw std::invalid_argument("census: negative t_max");
    const Isometry& g2 = c2.element;
    if (!g2.is_hyperbolic()) throw NotHyperbolic("census_point_geod: representative not hyperbolic");
    BallOptions bopt;
    bopt.cap = opt.cap;
    if (!is_primitive(G, g2, bopt))
        throw NotPrimitive("census_point_geod: representative is not primitive");

    HPoint p = reduce_to_fundamental_domain(G, q);
    LengthSpectrum S;
    S.t_max = T;
    S.rep1 = Representative::point_at(q);
    S.rep2 = c2;
    GeodesicLine L2 = axis(g2);
    double ell2 = translation_length(g2);
    double reach = T + dist(G.basepoint, p) + point_to_line(G.basepoint, L2).distance +
                   0.5 * ell2 + 0.1;
    GroupBall ball = enumerate_ball(G, reach, bopt);

    // one candidate per left coset h<g2>; the departure direction at p plus
    // the length identify the coset
    struct Candidate {
        double angle, length;
        int end_sign;
        std::string word;
        Isometry rep;
    };
    std::vector<Candidate> cands;
    for (const BallElement& el : ball.elements) {
        GeodesicLine lift = L2.apply(el.g);
        auto r = point_to_line(p, lift);
        if (!r.dir_defined || r.distance <= 0.0 || r.distance > T) continue;
        Vec2 dep = direction_toward(p, r.foot);
        Candidate c;
        c.angle = std::atan2(dep.y, dep.x);
        c.length = r.distance;
        // arrival direction continues away from p, i.e. opposite the foot
        // tangent that points back toward p
        c.end_sign = side_sign(lift, r.foot, Vec2{-r.dir_at_foot.x, -r.dir_at_foot.y});
        c.word = el.word;
        c.rep = el.g;
        cands.push_back(std::move(c));
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        if (x.angle != y.angle) return x.angle < y.angle;
        if (x.length != y.length) return x.length < y.length;
        return word_less(x.word, y.word);
    });
    auto same = [](const Candidate& x, const Candidate& y) {
        double da = std::abs(x.angle - y.angle);
        da = std::min(da, 2.0 * M_PI - da);
        return da <= kMergeTol && std::abs(x.length - y.length) <= kMergeTol;
    };
    std::vector<Candidate> kept;
    for (std::size_t i = 0; i < cands.size();) {
        std::size_t j = i, best = i;
        while (j < cands.size() && same(cands[i], cands[j])) {
            if (word_less(cands[j].word, cands[best].word)) best = j;
            ++j;
        }
        kept.push_back(cands[best]);
        i = j;
    }
    if (kept.size() >= 2 && same(kept.front(), kept.back())) {
        if (word_less(kept.back().word, kept.front().word)) kept.front() = kept.back();
        kept.pop_back();
    }
    for (const Candidate& c : kept) {
        if (c.end_sign == +1) {
            ArcRecord rec;
            rec.length = c.length;
            rec.coset_witness = c.rep;
            rec.end_sign = c.end_sign;
            rec.word = c.word;
            S.records.push_back(std::move(rec));
        } else {
            ++S.excluded_by_orientation;
        }
    }
    sort_records(S.records);
    return S;
}

std::size_t StepFunction::value_at(double T) const {
    std::size_t v = 0;
    for (const auto& [t, n] : jumps) {
        if (t > T) break;
        v = n;
    }
    return v;
}

StepFunction counting_function(const LengthSpectrum& S) {
    StepFunction N;
    std::size_t count = 0;
    for (std::size_t i = 0; i < S.records.size();) {
        std::size_t j = i;
        while (j < S.records.size() && S.records[j].length - S.records[i].length <= kMergeTol) ++j;
        count += j - i;
        N.jumps.emplace_back(S.records[i].length, count);
        i = j;
    }
    return N;
}

void write_spectrum_csv(const LengthSpectrum& S, std::ostream& out) {
    out << "length,multiplicity,start_sign,end_sign\n";
    char buf[96];
    for (std::size_t i = 0; i < S.records.size();) {
        const ArcRecord& lead = S.records[i];
        std::size_t j = i;
        while (j < S.records.size() && S.records[j].length - lead.length <= kMergeTol &&
               S.records[j].start_sign == lead.start_sign && S.records[j].end_sign == lead.end_sign)
            ++j;
        std::snprintf(buf, sizeof buf, "%.12g,%zu,%d,%d\n", lead.length, j - i, lead.start_sign,
                      lead.end_sign);
        out << buf;
        i = j;
    }
}

void write_spectrum_csv_file(const LengthSpectrum& S, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write spectrum CSV: " + path);
    write_spectrum_csv(S, out);
}

LengthSpectrum read_spectrum_csv(std::istream& in) {
    LengthSpectrum S;
    std::string line;
    if (!std::getline(in, line) || line.rfind("length,multiplicity", 0) != 0)
        throw std::runtime_error("spectrum CSV: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double length;
        std::size_t mult;
        int s1, s2;
        if (!(ss >> length >> mult >> s1 >> s2))
            throw std::runtime_error("spectrum CSV: malformed row: " + line);
        for (std::size_t k = 0; k < mult; ++k) {
            ArcRecord rec;
            rec.length = length;
            rec.start_sign = s1;
            rec.end_sign = s2;
            S.records.push_back(rec);
        }
        S.t_max = std::max(S.t_max, length);
    }
    sort_records(S.records);
    return S;
}

LengthSpectrum read_spectrum_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum CSV: " + path);
    return read_spectrum_csv(in);
}

}  // namespace ortholink
