#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pwh/cli.hpp"
#include "pwh/io.hpp"

using namespace pwh;
using io::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "pwh");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "pwh_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(cli::parse_complex("1+0.5i") == Complex(1.0, 0.5));
    CHECK(cli::parse_complex("-2i") == Complex(0.0, -2.0));
    CHECK(cli::parse_complex("3") == Complex(3.0, 0.0));
    CHECK(cli::parse_complex("0.5-1e-3i") == Complex(0.5, -1e-3));
    CHECK(cli::parse_complex("1e+2+i") == Complex(100.0, 1.0));
    CHECK(cli::parse_complex("-i") == Complex(0.0, -1.0));
    CHECK_THROWS_AS(cli::parse_complex("1+"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_complex("abc"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_complex(""), cli::UsageError);
}

TEST_CASE("spectrum of the d = 4 algebra") {
    const auto res = invoke({"spectrum", "--kappa", "-1/3", "--nmax", "6"});
    REQUIRE(res.code == 0);
    const auto j = Json::parse(res.out);
    CHECK(j.at("command") == "spectrum");
    CHECK(j.at("params").at("dimension") == 4);
    const auto& rows = j.at("rows");
    REQUIRE(rows.size() == 7);
    CHECK(rows[4].at("F") == "0");
    CHECK(rows[2].at("F") == "4/3");
    CHECK(rows[1].at("G") == "1/3");

    const auto csv = invoke({"spectrum", "--kappa", "-1/3", "--nmax", "6", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("n,F,F_value,G,G_value\n0,0,0,1,1\n", 0) == 0);
    CHECK(csv.out.find("\n4,0,0,-5/3,") != std::string::npos);
}

TEST_CASE("BG state artifact") {
    const auto res = invoke({"cs-bg", "--kappa", "1/2", "--z", "1+0.5i", "--phi", "0.3", "--normalize"});
    REQUIRE(res.code == 0);
    const auto j = Json::parse(res.out);
    const auto state = io::decode_coherent_state(j.at("state"));
    CHECK(state.kind() == StateKind::barut_girardello);
    CHECK(state.z() == Complex(1.0, 0.5));
    CHECK(state.phi() == 0.3);
    CHECK(state.normalized());
    const double n = bg_normalization(AlgebraParams({Rational(1, 2)}), Complex(1.0, 0.5));
    CHECK(j.at("abs_N").get<double>() == doctest::Approx(n).epsilon(1e-12));
    CHECK(j.at("eigen_residual").get<double>() <= 1e-12);
    CHECK(io::encode(state).dump() == j.at("state").dump());
}

TEST_CASE("growth artifact") {
    const auto res = invoke({"bargmann-growth", "--ell", "1,1", "--nmax", "5000"});
    REQUIRE(res.code == 0);
    const auto j = Json::parse(res.out);
    CHECK(j.at("closed_form").at("rho").get<double>() == doctest::Approx(2.0 / 3.0));
    CHECK(j.at("closed_form").at("sigma").get<double>() == doctest::Approx(1.5));
    CHECK(j.at("rel_error").at("rho").get<double>() < 0.05);
    CHECK(j.at("rel_error").at("sigma").get<double>() < 0.10);
    const auto est = io::decode_growth(j.at("estimate"));
    CHECK(est.fit_end == 5000);
}

TEST_CASE("every command produces re-parseable JSON") {
    const std::vector<std::vector<std::string>> runs{
        {"spectrum", "--ell", "2", "--nmax", "4"},
        {"rep-check", "--kappa", "-1/5,2/3"},
        {"rep-check", "--kappa", "1/2", "--window", "8"},
        {"truncate", "--kappa", "1/2", "--window", "6", "--s", "3"},
        {"cs-perelomov", "--kappa", "-1/4", "--z", "2-i"},
        {"cs-perelomov", "--kappa", "1/4", "--z", "0.5i", "--normalize"},
        {"cs-grassmann", "--kappa", "-1/2", "--phi", "0.2"},
        {"cs-grassmann", "--kappa", "1/3", "--s", "4"},
        {"measure", "--ell", "1", "--levels", "6"},
        {"measure", "--kappa", "-1/6", "--kind", "perelomov"},
        {"schwarz", "--ell", "2,3", "--w", "1-0.5i"},
    };
    for (const auto& args : runs) {
        CAPTURE(args[0]);
        const auto res = invoke(args);
        REQUIRE(res.code == 0);
        const auto j = Json::parse(res.out);
        CHECK(j.at("command") == args[0]);
        const auto params = io::decode_params(j.at("params"));
        CHECK(io::encode(params).dump() == j.at("params").dump());
        if (j.contains("state") && args[0] == "cs-grassmann") {
            CHECK(io::encode(io::decode_grassmann_state(j.at("state"))).dump() == j.at("state").dump());
        } else if (j.contains("state")) {
            CHECK(io::encode(io::decode_coherent_state(j.at("state"))).dump() == j.at("state").dump());
        }
        if (j.contains("measure")) {
            CHECK(io::encode(io::decode_measure(j.at("measure"))).dump() == j.at("measure").dump());
            CHECK(io::encode(io::decode_moments(j.at("moments"))).dump() == j.at("moments").dump());
        }
        // Deterministic output.
        CHECK(invoke(args).out == res.out);
    }
}

TEST_CASE("domain errors exit with 1 and name the condition") {
    auto res = invoke({"cs-perelomov", "--kappa", "1/4", "--z", "2"});
    CHECK(res.code == 1);
    CHECK(res.err.find("|z| < 1/sqrt(kappa_1)") != std::string::npos);
    res = invoke({"cs-perelomov", "--kappa", "1/4,1", "--z", "0.1"});
    CHECK(res.code == 1);
    CHECK(res.err.find("exist only for r = 1") != std::string::npos);
    res = invoke({"cs-bg", "--kappa", "-1/3", "--z", "1"});
    CHECK(res.code == 1);
    res = invoke({"spectrum", "--kappa", "-2/3", "--nmax", "3"});
    CHECK(res.code == 1);
    res = invoke({"spectrum", "--kappa", "0.5", "--nmax", "3"});
    CHECK(res.code == 1);
    res = invoke({"measure", "--kappa", "-1/9,3/5,5/2", "--kind", "perelomov"});
    CHECK(res.code == 1);
    CHECK(res.err.find("--allow-signed") != std::string::npos);
    res = invoke({"measure", "--kappa", "-1/9,3/5,5/2", "--kind", "perelomov", "--allow-signed"});
    CHECK(res.code == 0);
    CHECK(Json::parse(res.out).at("measure").at("signed_weights") == true);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"spectrum", "cs-bg", "--kappa", "1"}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"cs-bg", "--kappa", "1/2", "--z", "1+"}).code == 1);
    CHECK(invoke({"spectrum", "--kappa", "1/2", "--ell", "2", "--nmax", "2"}).code == 1);
    CHECK(invoke({"spectrum", "--kappa", "1/2", "--format", "xml"}).code == 1);
    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("bargmann-growth") != std::string::npos);
}

TEST_CASE("negative values after flags") {
    const auto res = invoke({"cs-perelomov", "--kappa", "-1/3", "--z", "-1-2i", "--phi", "-0.5"});
    REQUIRE(res.code == 0);
    const auto j = Json::parse(res.out);
    CHECK(j.at("params").at("kappas")[0] == "-1/3");
    CHECK(io::decode_complex(j.at("state").at("z")) == Complex(-1.0, -2.0));
    CHECK(j.at("params").at("phi").get<double>() == -0.5);
}

TEST_CASE("output files and I/O errors") {
    const auto path = scratch("spectrum.csv");
    std::filesystem::remove(path);
    auto res = invoke({"spectrum", "--kappa", "-1/3", "--nmax", "6", "--format", "csv", "--output", path.string()});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    CHECK(slurp(path) == invoke({"spectrum", "--kappa", "-1/3", "--nmax", "6", "--format", "csv"}).out);

    res = invoke({"spectrum", "--kappa", "1", "--nmax", "3", "--output", "/nonexistent/dir/out.json"});
    CHECK(res.code == 2);
    res = invoke({"spectrum", "--config", "/nonexistent/pwh.ini"});
    CHECK(res.code == 2);
}

TEST_CASE("config file with flag overrides") {
    const auto path = scratch("bg.ini");
    {
        std::ofstream cfg(path);
        cfg << "kappa = 1/2\nz = 1+0.5i\nphi = 0.3\nnormalize = true\n";
    }
    const auto from_file = invoke({"cs-bg", "--config", path.string()});
    REQUIRE(from_file.code == 0);
    const auto direct = invoke({"cs-bg", "--kappa", "1/2", "--z", "1+0.5i", "--phi", "0.3", "--normalize"});
    CHECK(from_file.out == direct.out);

    const auto overridden = invoke({"cs-bg", "--config", path.string(), "--phi", "0.7"});
    REQUIRE(overridden.code == 0);
    CHECK(Json::parse(overridden.out).at("params").at("phi").get<double>() == 0.7);
}

TEST_CASE("tail tolerance from the environment") {
    const std::vector<std::string> args{"cs-bg", "--kappa", "1/2", "--z", "2"};
    const auto tight = Json::parse(invoke(args).out).at("state").at("coeffs").size();
    ::setenv("PWH_TAIL_TOL", "1e-4", 1);
    const auto loose = Json::parse(invoke(args).out).at("state").at("coeffs").size();
    const auto flag_wins = Json::parse(invoke({"cs-bg", "--kappa", "1/2", "--z", "2", "--tail-tol", "1e-14"}).out)
                               .at("state").at("coeffs").size();
    ::unsetenv("PWH_TAIL_TOL");
    CHECK(loose < tight);
    CHECK(flag_wins == tight);
}

TEST_CASE("installed binary exit codes") {
    const std::string bin = PWH_CLI_PATH;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("spectrum --kappa -1/3 --nmax 6") == 0);
    CHECK(status("cs-perelomov --kappa 1/4 --z 2") == 1);
    CHECK(status("spectrum --kappa 1 --output /nonexistent/x.json") == 2);
}
