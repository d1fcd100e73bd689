#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "formwell/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = formwell::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string problems_dir() { return FORMWELL_PROBLEMS_DIR; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify matches the committed golden output for every problem file") {
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(problems_dir())) {
        if (entry.path().extension() != ".mxw") continue;
        ++seen;
        fs::path golden = entry.path();
        golden.replace_extension(".golden.json");
        INFO("file ", entry.path().string());
        REQUIRE(fs::exists(golden));
        Run r = run_cli({"verify", entry.path().string(), "--json"});
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        CHECK(r.out == slurp(golden));
    }
    CHECK(seen >= 9);
}

TEST_CASE("json output is deterministic") {
    std::string file = problems_dir() + "/monopole.mxw";
    Run a = run_cli({"verify", file, "--json"});
    Run b = run_cli({"verify", file, "--json"});
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

TEST_CASE("verdict does not drive the exit code") {
    Run r = run_cli({"verify", problems_dir() + "/nonsolution.mxw"});
    CHECK(r.code == 0);
    CHECK(r.out.find("vacuum solution") != std::string::npos);
    CHECK(r.out.find("no") != std::string::npos);
}

TEST_CASE("missing file exits 2 and names the file") {
    Run r = run_cli({"verify", "missing.mxw"});
    CHECK(r.code == 2);
    CHECK(r.err.find("missing.mxw") != std::string::npos);
}

TEST_CASE("malformed problem file exits 2 with position") {
    fs::path tmp = fs::temp_directory_path() / "formwell_bad.mxw";
    {
        std::ofstream out(tmp);
        out << "metric = euclidean\nf1 = z1 + )\n";
    }
    Run r = run_cli({"verify", tmp.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("2:") != std::string::npos);
    fs::remove(tmp);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);
    CHECK(run_cli({"star", "euclidean"}).code == 2);
    CHECK(run_cli({"frobnicate", "x"}).code == 2);
    CHECK(run_cli({"star", "spherical", "dz1"}).code == 2);
    CHECK(run_cli({"eval", problems_dir() + "/monopole.mxw", "--at", "1,2,3"}).code == 2);
}

TEST_CASE("star command prints the published value") {
    Run r = run_cli({"star", "euclidean", "dz1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1/2)*dz1/\\dz2/\\dzb2\n");

    Run rm = run_cli({"star", "minkowski", "dz1/\\dz2"});
    CHECK(rm.out == "(-1)*dz2/\\dzb1\n");

    Run rbad = run_cli({"star", "euclidean", "dz1/\\"});
    CHECK(rbad.code == 2);
}

TEST_CASE("tables command lists all 16 entries with provenance") {
    Run r = run_cli({"tables", "minkowski"});
    CHECK(r.code == 0);
    int lines = 0;
    std::istringstream in(r.out);
    std::string line;
    int paper = 0, derived = 0;
    while (std::getline(in, line)) {
        if (line.rfind("STAR(", 0) == 0) ++lines;
        if (line.find("[paper") != std::string::npos) ++paper;
        if (line.find("[derived") != std::string::npos) ++derived;
        CHECK(line.find("oracle agrees") != std::string::npos);
    }
    CHECK(lines == 16);
    CHECK(paper == 11);
    CHECK(derived == 5);

    Run rj = run_cli({"tables", "euclidean", "--json"});
    CHECK(rj.code == 0);
    CHECK(rj.out.find("\"oracle_matches\": true") != std::string::npos);
    CHECK(rj.out.find("\"oracle_matches\": false") == std::string::npos);
}

TEST_CASE("gauge command reports the shift identity") {
    Run r = run_cli({"gauge", problems_dir() + "/monopole.mxw", "z1*zb1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("curvature invariant   yes") != std::string::npos);
    CHECK(r.out.find("(match)") != std::string::npos);

    Run rj = run_cli({"gauge", problems_dir() + "/monopole.mxw", "z1*zb1", "--json"});
    CHECK(rj.out.find("\"curvature_invariant\": true") != std::string::npos);
    CHECK(rj.out.find("\"condition_shift\": \"2\"") != std::string::npos);
    CHECK(rj.out.find("\"half_operator_u\": \"2\"") != std::string::npos);

    Run rmissing = run_cli({"gauge", problems_dir() + "/monopole.mxw"});
    CHECK(rmissing.code == 2);

    // the file's gauge key is the fallback when no argument is given
    fs::path tmp = fs::temp_directory_path() / "formwell_gauge.mxw";
    {
        std::ofstream out(tmp);
        out << "metric = euclidean\nf1 = zb1\ngauge = z1*zb1\n";
    }
    Run rfile = run_cli({"gauge", tmp.string()});
    CHECK(rfile.code == 0);
    CHECK(rfile.out.find("u                     z1*zb1") != std::string::npos);
    fs::remove(tmp);
}

TEST_CASE("lorenz command normalizes when constant") {
    Run r = run_cli({"lorenz", problems_dir() + "/mink_linear.mxw"});
    CHECK(r.code == 0);
    CHECK(r.out.find("d*omega               2") != std::string::npos);
    CHECK(r.out.find("new d*omega           0") != std::string::npos);
    CHECK(r.out.find("curvature invariant   yes") != std::string::npos);

    Run rn = run_cli({"lorenz", problems_dir() + "/nonsolution.mxw"});
    CHECK(rn.code == 0);
    CHECK(rn.out.find("not constant") != std::string::npos);
}

TEST_CASE("eval command reports numeric fields and derivative checks") {
    Run r = run_cli({"eval", problems_dir() + "/monopole.mxw", "--at", "1,0.5,-1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("check_wirtinger f1    PASS") != std::string::npos);
    CHECK(r.out.find("check_wirtinger fb2   PASS") != std::string::npos);
    // monopole E is the constant (-2i, 0, 0) at every point
    CHECK(r.out.find("E") != std::string::npos);
    CHECK(r.out.find("-2i") != std::string::npos);

    Run rj = run_cli({"eval", problems_dir() + "/monopole.mxw", "--at", "1,0,0,0", "--json"});
    CHECK(rj.code == 0);
    CHECK(rj.out.find("\"f1\": true") != std::string::npos);
}

TEST_CASE("fields command prints components") {
    Run r = run_cli({"fields", problems_dir() + "/tau_m3.mxw"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F[dz1/\\dzb1]          3") != std::string::npos);
    CHECK(r.out.find("energy                36") != std::string::npos);
}
