#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ortholab/cli.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_runtime(std::string text) {
    // runtime_ms fields are excluded from the determinism contract
    static const std::regex pat("\"runtime_ms\": [0-9]+");
    return std::regex_replace(text, pat, "\"runtime_ms\": 0");
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/ortholab_test_") + name;
}

} // namespace

TEST_CASE("cli exit codes") {
    // usage errors
    CHECK(ortholab::cli::run({}) == 2);
    CHECK(ortholab::cli::run({"no-such-command"}) == 2);
    CHECK(ortholab::cli::run({"ortho-verify"}) == 2);          // missing --family
    CHECK(ortholab::cli::run({"ortho-verify", "--family", "cubic"}) == 2);
    // help is not an error
    CHECK(ortholab::cli::run({"--help"}) == 0);

    // passing runs exit 0
    CHECK(ortholab::cli::run({"ellipse-ortho", "--theta", "2", "--kmax", "4", "--out",
                              tmp_path("eo.json")}) == 0);
    // numeric domain errors surface as exit 1 with a failed report
    CHECK(ortholab::cli::run({"ellipse-ortho", "--theta", "0.5", "--out",
                              tmp_path("bad.json")}) == 1);
    // unwritable output path exits 3
    CHECK(ortholab::cli::run({"ellipse-ortho", "--theta", "2", "--kmax", "2", "--out",
                              "/nonexistent-dir/x.json"}) == 3);
}

TEST_CASE("cli json structure and values") {
    const auto out = tmp_path("ortho.json");
    const auto csv = tmp_path("ortho.csv");
    CHECK(ortholab::cli::run({"ortho-verify", "--family", "hermite", "--theta", "2",
                              "--kmax", "2", "--out", out, "--csv", csv}) == 0);
    const json doc = json::parse(slurp(out));
    CHECK(doc["command"] == "ortho-verify");
    CHECK(doc["tool_version"] == "ortholab 0.1.0");
    CHECK(doc["config"]["family"] == "hermite");
    CHECK(doc["summary"]["pass_count"] == 9);
    CHECK(doc["summary"]["fail_count"] == 0);
    CHECK(doc["reports"].size() == 9);
    // diagonal (0,0) equals pi
    for (const auto& rep : doc["reports"]) {
        if (rep["identity"] == "ortho(0,0)") {
            CHECK(std::abs(rep["computed"]["re"].get<double>() -
                           3.14159265358979324) < 1e-7);
            CHECK(rep["pass"] == true);
        }
    }
    // CSV has a header and one row per (k,m)
    std::stringstream ss(slurp(csv));
    std::string line;
    int lines = 0;
    while (std::getline(ss, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 1 + 9);
}

TEST_CASE("cli summability verdicts across the threshold") {
    const auto out = tmp_path("summ.json");
    CHECK(ortholab::cli::run({"summability", "--family", "laguerre", "--nu", "0.5",
                              "--gen-t", "0.5", "--theta-grid", "3.5,3.9,4.1",
                              "--kmax", "64", "--out", out}) == 0);
    const json doc = json::parse(slurp(out));
    REQUIRE(doc["reports"].size() == 3);
    CHECK(doc["reports"][0]["verdict"] == "Converged");
    CHECK(doc["reports"][1]["verdict"] == "Converged");
    CHECK(doc["reports"][2]["verdict"] == "Diverging");
    const auto radius = doc["config"]["radius_estimate"];
    CHECK(radius["flag"] == "finite");
    CHECK(radius["value"].get<double>() >= 3.8);
    CHECK(radius["value"].get<double>() <= 4.2);
}

TEST_CASE("cli kernel-check passes and reports pairs") {
    const auto out = tmp_path("kc.json");
    CHECK(ortholab::cli::run({"kernel-check", "--kind", "mehler", "--theta", "2",
                              "--pairs", "8", "--out", out}) == 0);
    const json doc = json::parse(slurp(out));
    CHECK(doc["summary"]["pass_count"] == 8);
    CHECK(doc["summary"]["max_rel_err"].get<double>() <= 1e-8);
}

TEST_CASE("cli norm-identity") {
    const auto out = tmp_path("ni.json");
    CHECK(ortholab::cli::run({"norm-identity", "--family", "hermite", "--t", "0.2",
                              "--theta", "2", "--out", out}) == 0);
    const json doc = json::parse(slurp(out));
    CHECK(doc["reports"][0]["pass"] == true);
    CHECK(doc["reports"][0]["rel_err"].get<double>() <= 1e-6);
}

TEST_CASE("cli output is byte-identical modulo runtime_ms") {
    const auto a = tmp_path("det_a.json");
    const auto b = tmp_path("det_b.json");
    for (const auto& path : {a, b}) {
        CHECK(ortholab::cli::run({"kernel-check", "--kind", "gegenbauer", "--lambda",
                                  "1", "--theta", "2", "--pairs", "6", "--seed",
                                  "777", "--out", path}) == 0);
    }
    const std::string text_a = strip_runtime(slurp(a));
    const std::string text_b = strip_runtime(slurp(b));
    CHECK(text_a == text_b);
    CHECK(!text_a.empty());

    // doubles are serialized with 17 significant digits
    static const std::regex digits17("[0-9]\\.[0-9]{16}");
    CHECK(std::regex_search(text_a, digits17));
}

TEST_CASE("cli results do not depend on the worker count") {
    const auto one = tmp_path("thr1.json");
    const auto many = tmp_path("thr8.json");
    setenv("ORTHOLAB_THREADS", "1", 1);
    CHECK(ortholab::cli::run({"norm-identity", "--family", "hermite", "--t", "0.4",
                              "--theta", "4", "--out", one}) == 0);
    setenv("ORTHOLAB_THREADS", "8", 1);
    CHECK(ortholab::cli::run({"norm-identity", "--family", "hermite", "--t", "0.4",
                              "--theta", "4", "--out", many}) == 0);
    unsetenv("ORTHOLAB_THREADS");
    CHECK(strip_runtime(slurp(one)) == strip_runtime(slurp(many)));
}

TEST_CASE("cli failure counting and exit code") {
    // an unreachable tolerance fails every pair: exit 1, counts populated
    const auto out = tmp_path("fail.json");
    CHECK(ortholab::cli::run({"kernel-check", "--kind", "mehler", "--theta", "1.5",
                              "--pairs", "5", "--tol", "1e-18", "--out", out}) == 1);
    const json doc = json::parse(slurp(out));
    CHECK(doc["summary"]["pass_count"].get<int>() == 0);
    CHECK(doc["summary"]["fail_count"].get<int>() == 5);
}

TEST_CASE("cli empty report list") {
    const auto out = tmp_path("empty.json");
    CHECK(ortholab::cli::run({"kernel-check", "--kind", "mehler", "--pairs", "0",
                              "--out", out}) == 0);
    const json doc = json::parse(slurp(out));
    CHECK(doc["summary"]["pass_count"] == 0);
    CHECK(doc["summary"]["fail_count"] == 0);
    CHECK(doc["reports"].empty());
}
