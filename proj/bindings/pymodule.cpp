// pybind11 surface of the core operations: half-plane geometry, surface
// groups and balls, arc censi, Riccati dynamics, series continuation and the
// exact diagram calculus.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ortholink/census.hpp"
#include "ortholink/diagram_fixtures.hpp"
#include "ortholink/euler_link.hpp"
#include "ortholink/fuchsian.hpp"
#include "ortholink/riccati.hpp"
#include "ortholink/series.hpp"

#include <sstream>

namespace py = pybind11;
using namespace ortholink;

namespace {

py::tuple rational_tuple(const Rational& r) {
    return py::make_tuple(r.numerator(), r.denominator());
}

}  // namespace

PYBIND11_MODULE(_ortholink, m) {
    m.doc() = "orthogeodesic arc censi, Poincare series and Legendrian linking";

    // ---- half-plane geometry
    py::class_<HPoint>(m, "HPoint")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &HPoint::x)
        .def_readwrite("y", &HPoint::y)
        .def("__repr__", [](const HPoint& p) {
            std::ostringstream ss;
            ss << "HPoint(" << p.x << ", " << p.y << ")";
            return ss.str();
        });

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y);

    py::class_<IdealPoint>(m, "IdealPoint")
        .def_static("finite", &IdealPoint::finite)
        .def_static("infinity", &IdealPoint::infinity)
        .def("is_infinity", [](const IdealPoint& p) { return p.is_infinity(); })
        .def("value", &IdealPoint::value);

    py::class_<Isometry>(m, "Isometry")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"),
             py::arg("d"))
        .def_property_readonly("a", &Isometry::a)
        .def_property_readonly("b", &Isometry::b)
        .def_property_readonly("c", &Isometry::c)
        .def_property_readonly("d", &Isometry::d)
        .def("trace", &Isometry::trace)
        .def("inverse", &Isometry::inverse)
        .def("is_hyperbolic", &Isometry::is_hyperbolic)
        .def("__mul__", &Isometry::operator*)
        .def("__call__", [](const Isometry& g, const HPoint& z) { return g(z); });

    py::class_<GeodesicLine>(m, "GeodesicLine")
        .def(py::init<IdealPoint, IdealPoint>())
        .def_readonly("p_minus", &GeodesicLine::p_minus)
        .def_readonly("p_plus", &GeodesicLine::p_plus)
        .def("reversed", &GeodesicLine::reversed)
        .def("apply", &GeodesicLine::apply);

    py::class_<PerpSegment>(m, "PerpSegment")
        .def_readonly("length", &PerpSegment::length)
        .def_readonly("foot1", &PerpSegment::foot1)
        .def_readonly("foot2", &PerpSegment::foot2)
        .def_readonly("dir1", &PerpSegment::dir1)
        .def_readonly("dir2", &PerpSegment::dir2);

    py::class_<PointLineResult>(m, "PointLineResult")
        .def_readonly("distance", &PointLineResult::distance)
        .def_readonly("foot", &PointLineResult::foot)
        .def_readonly("dir_at_foot", &PointLineResult::dir_at_foot)
        .def_readonly("dir_defined", &PointLineResult::dir_defined);

    m.def("mobius_apply", &mobius_apply);
    m.def("dist", &dist);
    m.def("axis", &axis);
    m.def("translation_length", &translation_length);
    m.def("common_perpendicular", &common_perpendicular);
    m.def("point_to_line", &point_to_line);
    m.def("side_sign", &side_sign);

    // ---- surface groups
    py::class_<SurfaceGroup>(m, "SurfaceGroup")
        .def_readonly("gen_names", &SurfaceGroup::gen_names)
        .def_readonly("generators", &SurfaceGroup::generators)
        .def_readonly("relator", &SurfaceGroup::relator)
        .def_readonly("genus", &SurfaceGroup::genus)
        .def_readonly("basepoint", &SurfaceGroup::basepoint)
        .def("generator", &SurfaceGroup::generator)
        .def("evaluate_word", &SurfaceGroup::evaluate_word)
        .def("displacement", &SurfaceGroup::displacement)
        .def("max_gen_displacement", &SurfaceGroup::max_gen_displacement);

    m.def("standard_surface_group", &standard_surface_group, py::arg("genus"));
    m.def("standard_genus2_group", &standard_genus2_group);
    m.def("read_group_file", &read_group_file);
    m.def("write_group_file", &write_group_file);

    py::class_<BallElement>(m, "BallElement")
        .def_readonly("g", &BallElement::g)
        .def_readonly("displacement", &BallElement::displacement)
        .def_readonly("word", &BallElement::word);

    py::class_<GroupBall>(m, "GroupBall")
        .def_readonly("radius", &GroupBall::radius)
        .def_readonly("elements", &GroupBall::elements);

    py::class_<BallOptions>(m, "BallOptions")
        .def(py::init<>())
        .def_readwrite("cap", &BallOptions::cap)
        .def_readwrite("margin", &BallOptions::margin);

    m.def("enumerate_ball", &enumerate_ball, py::arg("group"), py::arg("radius"),
          py::arg("options") = BallOptions{});
    m.def("find_word", &find_word, py::arg("group"), py::arg("g"), py::arg("max_len") = 64);
    m.def("is_primitive", &is_primitive, py::arg("group"), py::arg("g"),
          py::arg("options") = BallOptions{});
    m.def("double_coset_reps", &double_coset_reps, py::arg("group"), py::arg("g1"), py::arg("g2"),
          py::arg("radius"), py::arg("options") = BallOptions{});

    // ---- census
    py::class_<Representative>(m, "Representative")
        .def_static("point_at", &Representative::point_at)
        .def_static("closed_geodesic", &Representative::closed_geodesic)
        .def("reversed", &Representative::reversed)
        .def("epsilon", &Representative::epsilon);

    py::class_<ArcRecord>(m, "ArcRecord")
        .def_readonly("length", &ArcRecord::length)
        .def_readonly("start_sign", &ArcRecord::start_sign)
        .def_readonly("end_sign", &ArcRecord::end_sign)
        .def_readonly("word", &ArcRecord::word);

    py::class_<LengthSpectrum>(m, "LengthSpectrum")
        .def_readonly("records", &LengthSpectrum::records)
        .def_readonly("t_max", &LengthSpectrum::t_max)
        .def_readonly("excluded_by_orientation", &LengthSpectrum::excluded_by_orientation)
        .def("lengths", [](const LengthSpectrum& S) {
            std::vector<double> v;
            for (const ArcRecord& r : S.records) v.push_back(r.length);
            return v;
        });

    py::class_<CensusOptions>(m, "CensusOptions")
        .def(py::init<>())
        .def_readwrite("cap", &CensusOptions::cap)
        .def_readwrite("threads", &CensusOptions::threads);

    m.def("census_point_point", &census_point_point, py::arg("group"), py::arg("q1"),
          py::arg("q2"), py::arg("t_max"), py::arg("options") = CensusOptions{});
    m.def("census_geod_geod", &census_geod_geod, py::arg("group"), py::arg("c1"), py::arg("c2"),
          py::arg("t_max"), py::arg("options") = CensusOptions{});
    m.def("census_point_geod", &census_point_geod, py::arg("group"), py::arg("q"), py::arg("c2"),
          py::arg("t_max"), py::arg("options") = CensusOptions{});
    m.def("write_spectrum_csv_file", &write_spectrum_csv_file);
    m.def("read_spectrum_csv_file", &read_spectrum_csv_file);

    py::class_<StepFunction>(m, "StepFunction")
        .def_readonly("jumps", &StepFunction::jumps)
        .def("value_at", &StepFunction::value_at);
    m.def("counting_function", &counting_function);

    // ---- dynamics
    py::class_<RiccatiSolution>(m, "RiccatiSolution")
        .def_readonly("grid", &RiccatiSolution::grid)
        .def_readonly("values", &RiccatiSolution::values)
        .def_readonly("dt", &RiccatiSolution::dt);
    m.def("riccati_unstable", &riccati_unstable, py::arg("K"), py::arg("t0"), py::arg("t1"),
          py::arg("dt") = 1e-3);
    m.def("riccati_stable", &riccati_stable, py::arg("K"), py::arg("t0"), py::arg("t1"),
          py::arg("dt") = 1e-3);
    m.def("jacobi_propagator_const", &jacobi_propagator_const);
    m.def("conormal_transversality",
          [](const std::vector<double>& kappa, const std::vector<double>& Lu) {
              TransversalityResult r = conormal_transversality(kappa, Lu);
              return py::make_tuple(r.transversal, r.margin);
          });

    // ---- series
    py::class_<GrowthFit>(m, "GrowthFit")
        .def_readonly("h", &GrowthFit::h)
        .def_readonly("amplitude", &GrowthFit::amplitude)
        .def_readonly("max_residual", &GrowthFit::max_residual);
    py::class_<SeriesEstimate>(m, "SeriesEstimate")
        .def_readonly("value", &SeriesEstimate::value)
        .def_readonly("uncertainty", &SeriesEstimate::uncertainty)
        .def_readonly("method", &SeriesEstimate::method)
        .def_readonly("t_max_used", &SeriesEstimate::t_max_used);
    m.def("partial_series",
          [](const LengthSpectrum& S, std::complex<double> s) { return partial_series(S, s); });
    m.def("fit_growth", &fit_growth, py::arg("counting"), py::arg("T1"), py::arg("T2"));
    m.def("tail_completed_series", &tail_completed_series);
    m.def("continue_at_zero", &continue_at_zero, py::arg("spectrum"), py::arg("A"), py::arg("h"));

    // ---- diagram calculus
    py::enum_<CurveKind>(m, "CurveKind")
        .value("PointClass", CurveKind::PointClass)
        .value("LoopClass", CurveKind::LoopClass);
    m.def("epsilon_of", &epsilon_of);

    py::class_<CurveDiagram>(m, "CurveDiagram")
        .def_readonly("num_vertices", &CurveDiagram::num_vertices)
        .def_readonly("declared_chi", &CurveDiagram::declared_chi)
        .def("num_edges", &CurveDiagram::num_edges);

    m.def("validate_diagram", [](const CurveDiagram& D) { return validate_diagram(D).violations; });
    m.def("linking", [](const CurveDiagram& D) { return rational_tuple(linking(D)); });
    m.def("value_at_zero", [](const CurveDiagram& D) { return rational_tuple(value_at_zero(D)); });
    m.def("swap_curves", &swap_curves);
    m.def("reverse_curve", &reverse_curve);
    m.def("read_diagram_file", &read_diagram_file);
    m.def("write_diagram_file", &write_diagram_file);
    m.def("fixture_names", &fixture_names);
    m.def("fixture_by_name", &fixture_by_name);
    m.def("random_subdivide", &random_subdivide, py::arg("diagram"), py::arg("seed"),
          py::arg("n_ops"));

    py::register_exception<NotHyperbolic>(m, "NotHyperbolicError");
    py::register_exception<RadiusTooLarge>(m, "RadiusTooLargeError");
    py::register_exception<NotInGroup>(m, "NotInGroupError");
    py::register_exception<NotPrimitive>(m, "NotPrimitiveError");
    py::register_exception<NotNullHomologous>(m, "NotNullHomologousError");
    py::register_exception<BlowUp>(m, "BlowUpError");
    py::register_exception<PoleProximity>(m, "PoleProximityError");
    py::register_exception<UnstableExtrapolation>(m, "UnstableExtrapolationError");
    py::register_exception<InsufficientData>(m, "InsufficientDataError");
}
