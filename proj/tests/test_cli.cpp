// End-to-end checks of the command line binary: file formats, exit codes,
// determinism across runs and thread counts, and the census/series/link
// pipeline. Invoked as: test_cli <path-to-ortholink-binary>

#include "ortholink/census.hpp"
#include "ortholink/fuchsian.hpp"
#include "ortholink/series.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok    %s\n", what.c_str());
    } else {
        std::printf("FAIL  %s\n", what.c_str());
        ++failures;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int exit_code;
    std::string out, err;
};

RunResult run(const std::string& bin, const std::string& args) {
    std::string out_path = "cli_stdout.txt", err_path = "cli_stderr.txt";
    std::string cmd = bin + " " + args + " > " + out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <ortholink-binary>\n");
        return 1;
    }
    std::string bin = std::filesystem::absolute(argv[1]).string();
    auto dir = std::filesystem::temp_directory_path() / "ortholink_cli_test";
    std::filesystem::create_directories(dir);
    std::filesystem::current_path(dir);

    using namespace ortholink;

    // ---- surface gen
    {
        RunResult r = run(bin, "surface gen --genus 2 -o g2.grp");
        check(r.exit_code == 0, "surface gen exits 0");
        SurfaceGroup G = read_group_file("g2.grp");
        check(G.generators.size() == 4, "generated group has 4 generators");
        check(G.relator == "abABcdCD", "relator has the canonical shape");
        SurfaceGroup ref = standard_genus2_group();
        double worst = 0;
        for (std::size_t i = 0; i < 4; ++i)
            worst = std::max(worst, G.generators[i].max_abs_entry_diff(ref.generators[i]));
        check(worst < 1e-12, "round trip reproduces the matrices to 1e-12");

        RunResult bad = run(bin, "surface gen --genus 1 -o g1.grp");
        check(bad.exit_code == 2, "genus 1 exits 2");
        check(bad.err.find("genus must be >= 2") != std::string::npos, "genus 1 message");
    }

    // ---- census
    {
        RunResult r0 = run(bin, "census --group g2.grp --rep1 point:0,1 --rep2 point:0,1 "
                                "--tmax 0 -o empty.csv");
        check(r0.exit_code == 0, "tmax 0 census exits 0");
        check(slurp("empty.csv") == "length,multiplicity,start_sign,end_sign\n",
              "tmax 0 census writes a bare header");

        RunResult r1 = run(bin, "census --group g2.grp --rep1 point:0,1 --rep2 point:0.15,0.9 "
                                "--tmax 6 -o s1.csv");
        RunResult r2 = run(bin, "census --group g2.grp --rep1 point:0,1 --rep2 point:0.15,0.9 "
                                "--tmax 6 -o s2.csv --threads 4");
        check(r1.exit_code == 0 && r2.exit_code == 0, "census runs exit 0");
        check(slurp("s1.csv") == slurp("s2.csv"), "census output independent of --threads");
        RunResult r3 = run(bin, "census --group g2.grp --rep1 point:0,1 --rep2 point:0.15,0.9 "
                                "--tmax 6 -o s3.csv");
        check(slurp("s1.csv") == slurp("s3.csv"), "census output byte-identical across runs");

        LengthSpectrum expect =
            census_point_point(standard_genus2_group(), {0, 1}, {0.15, 0.9}, 6.0);
        LengthSpectrum got = read_spectrum_csv_file("s1.csv");
        check(got.records.size() == expect.records.size(), "census CSV matches the library count");
        bool lengths_ok = got.records.size() == expect.records.size();
        for (std::size_t i = 0; lengths_ok && i < got.records.size(); ++i)
            lengths_ok = std::abs(got.records[i].length - expect.records[i].length) < 1e-9;
        check(lengths_ok, "census CSV lengths match the library within 1e-9");

        RunResult geod = run(bin, "census --group g2.grp --rep1 geodesic:a --rep2 geodesic:b "
                                  "--tmax 5 -o gg.csv --threads 3");
        check(geod.exit_code == 0, "geodesic census exits 0");

        RunResult capped = run(bin, "census --group g2.grp --rep1 point:0,1 --rep2 point:0,1 "
                                    "--tmax 12 -o big.csv --cap 1000");
        check(capped.exit_code == 3, "enumeration cap exits 3");
    }

    // ---- series
    {
        // synthetic zeta fixture: lengths log(k/A) for A = 1/2
        LengthSpectrum S;
        double A = 0.5;
        for (std::size_t k = 1; k <= 200000; ++k) {
            ArcRecord rec;
            rec.length = std::log(static_cast<double>(k) / A);
            S.records.push_back(rec);
            S.t_max = std::max(S.t_max, rec.length);
        }
        write_spectrum_csv_file(S, "zeta.csv");
        RunResult r = run(bin, "series --spectrum zeta.csv --at 0 --json --json-out zeta.json "
                               "--diagnostics diag.csv");
        check(r.exit_code == 0, "series exits 0");
        nlohmann::json j = nlohmann::json::parse(r.out);
        check(std::abs(j["h"].get<double>() - 1.0) < 0.01, "series fits h near 1");
        check(std::abs(j["A"].get<double>() - A) < 0.01, "series fits the amplitude");
        check(std::abs(j["estimate"].get<double>() + 0.5) < 0.05,
              "series estimate within 0.05 of -1/2");
        check(std::abs(j["estimate"].get<double>() + 0.5) <= j["uncertainty"].get<double>(),
              "series uncertainty covers the truth");
        check(slurp("diag.csv").rfind("s,partial,completed,F\n", 0) == 0,
              "diagnostics table header");

        RunResult txt = run(bin, "series --spectrum zeta.csv");
        check(txt.exit_code == 0 && txt.out.find("h ") == 0 &&
                  txt.out.find("uncertainty ") != std::string::npos,
              "text report prints the four fields");

        RunResult missing = run(bin, "series --spectrum nope.csv");
        check(missing.exit_code == 2, "missing spectrum file exits 2");
    }

    // ---- link
    {
        RunResult r = run(bin, "link --fixture distinct-points --emit dp.cdg");
        check(r.exit_code == 0, "link fixture exits 0");
        check(r.out.find("N_infty = -1/2") != std::string::npos, "distinct points value -1/2");
        check(r.out.find("integral yes") != std::string::npos, "chi L integrality reported");

        RunResult file = run(bin, "link --diagram dp.cdg");
        check(file.exit_code == 0 && file.out == r.out, "emitted diagram reproduces the report");

        RunResult pushoff = run(bin, "link --fixture same-point-pushoff");
        check(pushoff.out.find("N_infty = -3/2") != std::string::npos,
              "same-point push-off value -3/2");

        // corrupt the diagram: bogus declared chi
        std::string text = slurp("dp.cdg");
        auto pos = text.find("CHI -2");
        text.replace(pos, 6, "CHI -4");
        std::ofstream("bad.cdg") << text;
        RunResult bad = run(bin, "link --diagram bad.cdg");
        check(bad.exit_code == 4, "invalid diagram exits 4");
        check(bad.err.find("euler characteristic mismatch") != std::string::npos,
              "violations listed");

        RunResult verify = run(bin, "link --fixture distinct-points --verify-against zeta.json");
        check(verify.exit_code == 0 && verify.out.find("verify PASS") != std::string::npos,
              "zeta estimate verifies against the exact -1/2");

        RunResult verify_bad = run(bin, "link --fixture same-point-pushoff "
                                        "--verify-against zeta.json");
        check(verify_bad.exit_code == 4 && verify_bad.out.find("verify FAIL") != std::string::npos,
              "mismatched rational fails verification");
    }

    std::printf("%s: %d failure(s)\n", failures == 0 ? "SUCCESS" : "FAILURE", failures);
    return failures == 0 ? 0 : 1;
}
