#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef HYPMOD_BIN
#error "HYPMOD_BIN must point at the hypmod executable"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// runs a shell command, merging stderr into the captured output
RunResult run(const std::string& args) {
    const std::string cmd = std::string(HYPMOD_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

double parse_field(const std::string& line, const std::string& key) {
    const auto pos = line.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::stod(line.substr(pos + key.size() + 1));
}

} // namespace

TEST_CASE("polar conversion round trip, string-parsed") {
    const RunResult fwd = run("polar --from-cartesian 0.5 0");
    CHECK(fwd.exit_code == 0);
    const double r = parse_field(fwd.output, "r");
    const double theta = parse_field(fwd.output, "theta");
    CHECK(r == doctest::Approx(0.693147).epsilon(1e-6));
    CHECK(theta == doctest::Approx(3.141593).epsilon(1e-6));

    char back_cmd[128];
    std::snprintf(back_cmd, sizeof(back_cmd),
                  "polar --to-cartesian %.12g %.12g", r, theta);
    const RunResult back = run(back_cmd);
    CHECK(back.exit_code == 0);
    CHECK(std::abs(parse_field(back.output, "lambda") - 0.5) <= 1e-9);
    CHECK(std::abs(parse_field(back.output, "t") - 0.0) <= 1e-9);
}

TEST_CASE("report JSON carries the fixed keys") {
    const RunResult res = run("annulus --r1 1 --r2 2 --family joining");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.output);
    for (const char* key :
         {"family", "parameters", "closed_form", "density_energy",
          "admissibility_min", "admissibility_argmin", "discrete_lower_bound",
          "oracle_value", "warnings", "seed"})
        CHECK(doc.contains(key));
    CHECK(doc["family"] == "annulus_joining");
    CHECK(doc["closed_form"].get<double>() ==
          doctest::Approx(12.5765485).epsilon(1e-6));
    CHECK(doc["oracle_value"].get<double>() ==
          doctest::Approx(12.5765485).epsilon(1e-6));
    CHECK(doc["warnings"].empty());
    CHECK(doc["parameters"].contains("r_inner"));
}

TEST_CASE("quad report surfaces the area discrepancy and the gap warning") {
    const RunResult res = run("quad --a 2 --family arcs");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.output);
    CHECK(doc["closed_form"].get<double>() ==
          doctest::Approx(2.28906061).epsilon(1e-6));
    CHECK(doc["admissibility_min"].get<double>() ==
          doctest::Approx(0.940637283).epsilon(1e-5));
    CHECK(!doc["warnings"].empty());
    const auto& params = doc["parameters"];
    CHECK(params["area_euclidean"].get<double>() ==
          doctest::Approx(1.74744172).epsilon(1e-6));
    CHECK(params["area_variant"].get<double>() ==
          doctest::Approx(4.88903437).epsilon(1e-6));
}

TEST_CASE("quads with b != 1 are normalized conformally") {
    // Q(3,2) ~ Q(2,1): same slope (a-1)/b, so the same modulus
    const RunResult r32 = run("quad --a 3 --b 2 --family arcs");
    const RunResult r21 = run("quad --a 2 --family arcs");
    REQUIRE(r32.exit_code == 0);
    const nlohmann::json d32 = nlohmann::json::parse(r32.output);
    const nlohmann::json d21 = nlohmann::json::parse(r21.output);
    CHECK(d32["closed_form"] == d21["closed_form"]);
    CHECK(d32["parameters"]["a"].get<double>() == 2.0);
    CHECK(d32["parameters"]["a_input"].get<double>() == 3.0);
}

TEST_CASE("CSV output has a header and one row per audited curve") {
    const RunResult res = run("quad --a 2 --format csv");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output.rfind("parameter,integral\n", 0) == 0);
    int lines = 0;
    for (char c : res.output)
        if (c == '\n')
            ++lines;
    CHECK(lines == 202); // header + 201 audited curves
}

TEST_CASE("identical invocations produce byte-identical output") {
    const RunResult a = run("verify --suite annulus --seed 7");
    const RunResult b = run("verify --suite annulus --seed 7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    const nlohmann::json doc = nlohmann::json::parse(a.output);
    CHECK(doc["suite"] == "annulus");
    CHECK(doc["seed"] == 7);
    CHECK(doc["all_pass"] == true);
    for (const auto& report : doc["reports"])
        CHECK(report["seed"] == 7);
    CHECK(doc["reports"].size() == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("quad --a 1").exit_code == 1);
    CHECK(run("quad --a 1").output.find("DegenerateQuad") != std::string::npos);
    CHECK(run("annulus --r1 2 --r2 1").exit_code == 1);
    CHECK(run("annulus --r1 2 --r2 1").output.find("DegenerateAnnulus") !=
          std::string::npos);

    CHECK(run("quad").exit_code == 2);                    // missing --a
    CHECK(run("verify --grid-n 4").exit_code == 2);       // grid-n < 8
    CHECK(run("verify --tol -1").exit_code == 2);         // tol <= 0
    CHECK(run("nonsense").exit_code == 2);                // unknown command
    CHECK(run("quad --a 2 --family bogus").exit_code == 2);
}

TEST_CASE("SVG plots") {
    const RunResult quad =
        run("plot --domain quad --a 2 --out /tmp/hypmod_test_quad.svg");
    REQUIRE(quad.exit_code == 0);
    std::ifstream in("/tmp/hypmod_test_quad.svg");
    std::string svg((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("inner_arc_radius=1.41421356") != std::string::npos);
    CHECK(svg.find("outer_arc_radius=2.23606798") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    const RunResult ann = run(
        "plot --domain annulus --r1 1 --r2 2 --out /tmp/hypmod_test_ann.svg");
    REQUIRE(ann.exit_code == 0);
    std::ifstream in2("/tmp/hypmod_test_ann.svg");
    std::string svg2((std::istreambuf_iterator<char>(in2)),
                     std::istreambuf_iterator<char>());
    int circles = 0;
    for (std::size_t pos = 0; (pos = svg2.find("<circle", pos)) != std::string::npos;
         ++pos)
        ++circles;
    CHECK(circles == 2);
    CHECK(svg2.find("euclidean_inner=((1.54308063,0),1.17520119)") !=
          std::string::npos);
    CHECK(svg2.find("euclidean_outer=((3.76219569,0),3.62686041)") !=
          std::string::npos);

    // deterministic bytes
    run("plot --domain quad --a 2 --out /tmp/hypmod_test_quad2.svg");
    std::ifstream in3("/tmp/hypmod_test_quad2.svg");
    std::string svg3((std::istreambuf_iterator<char>(in3)),
                     std::istreambuf_iterator<char>());
    CHECK(svg == svg3);

    CHECK(run("plot --domain quad --a 2 --out /nonexistent_dir/x.svg").exit_code ==
          1);
    CHECK(run("plot --domain quad --a 2 --out /nonexistent_dir/x.svg")
              .output.find("IoFailure") != std::string::npos);
    CHECK(run("plot --domain quad --out /tmp/x.svg").exit_code == 2); // no --a
}

TEST_CASE("config file fills unset options, flags override") {
    {
        std::ofstream cfg("/tmp/hypmod_test_cfg.txt");
        cfg << "r1=1\nr2=2\nfamily=joining\n";
    }
    const RunResult from_cfg = run("annulus --config /tmp/hypmod_test_cfg.txt");
    REQUIRE(from_cfg.exit_code == 0);
    const RunResult direct = run("annulus --r1 1 --r2 2 --family joining");
    CHECK(from_cfg.output == direct.output);

    const RunResult overridden =
        run("annulus --config /tmp/hypmod_test_cfg.txt --r2 3");
    REQUIRE(overridden.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(overridden.output);
    CHECK(doc["parameters"]["r_outer"].get<double>() == 3.0);
}
