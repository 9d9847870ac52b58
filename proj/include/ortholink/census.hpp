#pragma once

// Census of geodesic arcs joining two representatives and directly
// orthogonal to both: length spectra, counting functions and the CSV
// interchange format.

#include "ortholink/fuchsian.hpp"

#include <iosfwd>

namespace ortholink {

struct Representative {
    enum class Kind { Point, ClosedGeodesic };
    Kind kind = Kind::Point;
    HPoint point{0.0, 1.0};  // Kind::Point
    Isometry element;        // Kind::ClosedGeodesic; reversing orientation = inverse

    static Representative point_at(const HPoint& q) {
        Representative r;
        r.kind = Kind::Point;
        r.point = q;
        return r;
    }
    static Representative closed_geodesic(const Isometry& g) {
        Representative r;
        r.kind = Kind::ClosedGeodesic;
        r.element = g;
        return r;
    }
    Representative reversed() const {
        Representative r = *this;
        if (kind == Kind::ClosedGeodesic) r.element = element.inverse();
        return r;
    }
    // +1 for the trivial class (a point), -1 otherwise
    int epsilon() const { return kind == Kind::Point ? +1 : -1; }
};

struct ArcRecord {
    double length = 0.0;
    Isometry coset_witness;
    int start_sign = +1, end_sign = +1;  // vacuous +1 at Point endpoints
    std::string word;                    // witness word when available
};

struct LengthSpectrum {
    std::vector<ArcRecord> records;  // sorted ascending by length
    double t_max = 0.0;
    Representative rep1, rep2;
    // arcs meeting both representatives orthogonally but failing a
    // direct-orientation sign; reported for epsilon-bookkeeping audits
    std::size_t excluded_by_orientation = 0;
};

struct CensusOptions {
    std::size_t cap = 10'000'000;
    int threads = 1;
};

// point reduced into the Dirichlet domain of the basepoint
HPoint reduce_to_fundamental_domain(const SurfaceGroup& G, HPoint q);

LengthSpectrum census_point_point(const SurfaceGroup& G, const HPoint& q1, const HPoint& q2,
                                  double T, const CensusOptions& opt = {});

LengthSpectrum census_geod_geod(const SurfaceGroup& G, const Representative& c1,
                                const Representative& c2, double T,
                                const CensusOptions& opt = {});

LengthSpectrum census_point_geod(const SurfaceGroup& G, const HPoint& q,
                                 const Representative& c2, double T,
                                 const CensusOptions& opt = {});

// right-continuous step data of T -> #{arcs of length <= T}
struct StepFunction {
    std::vector<std::pair<double, std::size_t>> jumps;  // (abscissa, cumulative count)
    std::size_t value_at(double T) const;
};

StepFunction counting_function(const LengthSpectrum& S);

// CSV with header `length,multiplicity,start_sign,end_sign`, lengths printed
// with 12 significant digits, sorted ascending, equal lengths (1e-7) merged
void write_spectrum_csv(const LengthSpectrum& S, std::ostream& out);
void write_spectrum_csv_file(const LengthSpectrum& S, const std::string& path);
LengthSpectrum read_spectrum_csv(std::istream& in);  // multiplicities expanded
LengthSpectrum read_spectrum_csv_file(const std::string& path);

}  // namespace ortholink
