// ortholink command line: surface-group generation, arc censi, Poincare
// series reports and the exact topological values, tied together so the
// dynamical and topological sides can be cross-checked from a shell.
//
// exit codes: 0 ok, 2 usage/input, 3 resource cap, 4 validation failure

#include "CLI11.hpp"
#include "json.hpp"

#include "ortholink/census.hpp"
#include "ortholink/diagram_fixtures.hpp"
#include "ortholink/euler_link.hpp"
#include "ortholink/fuchsian.hpp"
#include "ortholink/series.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace ortholink;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitValidation = 4;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Representative parse_representative(const SurfaceGroup& G, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("representative must be point:<x>,<y> or geodesic:<word>");
    std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    if (kind == "point") {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("point representative needs <x>,<y>");
        HPoint q{std::stod(rest.substr(0, comma)), std::stod(rest.substr(comma + 1))};
        if (q.y <= 0) throw std::invalid_argument("point must lie in the upper half-plane");
        return Representative::point_at(q);
    }
    if (kind == "geodesic") return Representative::closed_geodesic(G.evaluate_word(rest));
    throw std::invalid_argument("unknown representative kind: " + kind);
}

int cmd_surface_gen(int genus, const std::string& out_path) {
    if (genus < 2) {
        std::cerr << "genus must be >= 2\n";
        return kExitUsage;
    }
    SurfaceGroup G = standard_surface_group(genus);
    write_group_file(G, out_path);
    std::cout << "wrote " << out_path << " (genus " << genus << ", "
              << G.generators.size() << " generators)\n";
    return kExitOk;
}

int cmd_census(const std::string& group_path, const std::string& rep1, const std::string& rep2,
               double tmax, const std::string& out_path, int threads, std::size_t cap) {
    if (tmax < 0.0 || tmax > 16.0) {
        std::cerr << "census: --tmax must lie in [0, 16]\n";
        return kExitUsage;
    }
    if (cap > 10'000'000) {
        std::cerr << "census: --cap must be at most 10000000\n";
        return kExitUsage;
    }
    SurfaceGroup G = read_group_file(group_path);
    Representative c1 = parse_representative(G, rep1);
    Representative c2 = parse_representative(G, rep2);
    CensusOptions opt;
    opt.threads = threads;
    opt.cap = cap;
    LengthSpectrum S;
    if (c1.kind == Representative::Kind::Point && c2.kind == Representative::Kind::Point)
        S = census_point_point(G, c1.point, c2.point, tmax, opt);
    else if (c1.kind == Representative::Kind::Point)
        S = census_point_geod(G, c1.point, c2, tmax, opt);
    else if (c2.kind == Representative::Kind::Point)
        S = census_point_geod(G, c2.point, c1, tmax, opt);
    else
        S = census_geod_geod(G, c1, c2, tmax, opt);
    write_spectrum_csv_file(S, out_path);
    std::cout << "arcs " << S.records.size() << " excluded_by_orientation "
              << S.excluded_by_orientation << " t_max " << fmt(tmax) << "\n";
    return kExitOk;
}

int cmd_series(const std::string& spectrum_path, double at, bool json, double window_lo,
               double window_hi, const std::string& diagnostics_path,
               const std::string& json_out) {
    LengthSpectrum S = read_spectrum_csv_file(spectrum_path);
    StepFunction N = counting_function(S);
    double hi = window_hi > 0 ? window_hi : S.t_max;
    GrowthFit fit = fit_growth(N, window_lo, hi);

    double estimate, uncertainty;
    if (at == 0.0) {
        SeriesEstimate est = continue_at_zero(S, fit.amplitude, fit.h);
        estimate = est.value;
        uncertainty = est.uncertainty;
    } else {
        estimate = tail_completed_series(S, at, fit.amplitude, fit.h);
        uncertainty = 0.0;
    }
    if (!diagnostics_path.empty()) {
        std::ofstream d(diagnostics_path);
        if (!d) throw std::runtime_error("cannot write diagnostics: " + diagnostics_path);
        write_series_diagnostics(S, fit.amplitude, fit.h, d);
    }
    std::string record = std::string("{\"h\": ") + fmt(fit.h) + ", \"A\": " + fmt(fit.amplitude) +
                         ", \"estimate\": " + fmt(estimate) +
                         ", \"uncertainty\": " + fmt(uncertainty) + "}";
    if (!json_out.empty()) {
        std::ofstream j(json_out);
        j << record << "\n";
    }
    if (json) {
        std::cout << record << "\n";
    } else {
        std::cout << "h " << fmt(fit.h) << "\n";
        std::cout << "A " << fmt(fit.amplitude) << "\n";
        std::cout << "estimate " << fmt(estimate) << " at s = " << fmt(at) << "\n";
        std::cout << "uncertainty " << fmt(uncertainty) << "\n";
    }
    return kExitOk;
}

int cmd_link(const std::string& diagram_path, const std::string& fixture,
             const std::string& emit_path, const std::string& verify_path) {
    CurveDiagram D;
    if (!fixture.empty())
        D = fixture_by_name(fixture);
    else
        D = read_diagram_file(diagram_path);
    if (!emit_path.empty()) write_diagram_file(D, emit_path);

    ValidationReport rep = validate_diagram(D);
    if (!rep.valid()) {
        std::cerr << "invalid diagram:\n";
        for (const std::string& v : rep.violations) std::cerr << "  " << v << "\n";
        return kExitValidation;
    }
    Rational L = linking(D);
    Rational value = value_at_zero(D);
    Rational chiL = Rational(D.declared_chi) * L;
    std::cout << "L = " << fmt(L) << "\n";
    std::cout << "N_infty = " << fmt(value) << "\n";
    std::cout << "chi(X) * L = " << fmt(chiL) << " integral "
              << (chiL.denominator() == 1 ? "yes" : "NO") << "\n";

    if (!verify_path.empty()) {
        std::ifstream in(verify_path);
        if (!in) throw std::runtime_error("cannot open series report: " + verify_path);
        nlohmann::json j;
        in >> j;
        double est = j.at("estimate").get<double>();
        double unc = j.at("uncertainty").get<double>();
        double exact = static_cast<double>(value.numerator()) /
                       static_cast<double>(value.denominator());
        bool pass = std::abs(est - exact) <= unc;
        std::cout << "verify " << (pass ? "PASS" : "FAIL") << " |" << fmt(est) << " - "
                  << fmt(exact) << "| <= " << fmt(unc) << "\n";
        if (!pass) return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogeodesic arc censi, Poincare series and Legendrian linking"};
    app.require_subcommand(1);

    // surface gen
    auto* surface = app.add_subcommand("surface", "surface group files");
    surface->require_subcommand(1);
    auto* gen = surface->add_subcommand("gen", "write a standard 4g-gon group");
    int genus = 2;
    std::string surface_out = "surface.grp";
    gen->add_option("--genus", genus, "surface genus (>= 2)");
    gen->add_option("-o,--output", surface_out, "output .grp path");

    // census
    auto* census = app.add_subcommand("census", "enumerate orthogonal geodesic arcs");
    std::string group_path, rep1, rep2, census_out = "spectrum.csv";
    double tmax = 6.0;
    int threads = 1;
    std::size_t cap = 10'000'000;
    census->add_option("--group", group_path, "surface group file")->required();
    census->add_option("--rep1", rep1, "point:<x>,<y> or geodesic:<word>")->required();
    census->add_option("--rep2", rep2, "point:<x>,<y> or geodesic:<word>")->required();
    census->add_option("--tmax", tmax, "length window")->required();
    census->add_option("-o,--output", census_out, "output CSV path");
    census->add_option("--threads", threads, "worker threads (output independent of it)");
    census->add_option("--cap", cap, "enumeration cap");

    // series
    auto* series = app.add_subcommand("series", "growth fit and continued value");
    std::string spectrum_path, diagnostics_path, json_out;
    double at = 0.0, window_lo = 4.0, window_hi = -1.0;
    bool as_json = false;
    series->add_option("--spectrum", spectrum_path, "spectrum CSV")->required();
    series->add_option("--at", at, "evaluation point (0 = continued value)");
    series->add_flag("--json", as_json, "print a machine-readable record");
    series->add_option("--window-lo", window_lo, "growth fit window start");
    series->add_option("--window-hi", window_hi, "growth fit window end (default t_max)");
    series->add_option("--diagnostics", diagnostics_path, "write s,partial,completed,F table");
    series->add_option("--json-out", json_out, "also write the record to a file");

    // link
    auto* link = app.add_subcommand("link", "exact linking and value at zero");
    std::string diagram_path, fixture, emit_path, verify_path;
    link->add_option("--diagram", diagram_path, "curve diagram (.cdg)");
    link->add_option("--fixture", fixture, "built-in diagram name");
    link->add_option("--emit", emit_path, "write the diagram to a file");
    link->add_option("--verify-against", verify_path, "series JSON record to compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_surface_gen(genus, surface_out);
        if (census->parsed())
            return cmd_census(group_path, rep1, rep2, tmax, census_out, threads, cap);
        if (series->parsed())
            return cmd_series(spectrum_path, at, as_json, window_lo, window_hi, diagnostics_path,
                              json_out);
        if (link->parsed()) {
            if (diagram_path.empty() && fixture.empty()) {
                std::cerr << "link: need --diagram or --fixture\n";
                return kExitUsage;
            }
            return cmd_link(diagram_path, fixture, emit_path, verify_path);
        }
    } catch (const RadiusTooLarge& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const NotNullHomologous& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InsufficientData& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
