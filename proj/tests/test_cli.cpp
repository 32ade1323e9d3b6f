#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modgal/cli.hpp"
#include "modgal/serialize.hpp"

using namespace modgal;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "modgal");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}

} // namespace

TEST_CASE("qexp") {
    Run r = run({"qexp", "--weight", "12", "--ell", "13", "--terms", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 5 10 7\n");

    r = run({"qexp", "--weight", "12", "--ell", "13", "--terms", "1"});
    CHECK(r.out == "1\n");

    r = run({"qexp", "--weight", "14", "--ell", "13", "--terms", "5"});
    CHECK(r.code == cli::exit_code::kUsage);
    CHECK(r.err.find("weight 14") != std::string::npos);

    r = run({"qexp", "-k", "16", "-l", "13", "--terms", "3", "--format", "json"});
    CHECK(r.code == 0);
    const QExpansion f = qexpansion_from_json(Json::parse(r.out));
    CHECK(f == delta_k(16, 13, 3));

    CHECK(run({"qexp", "--weight", "12", "--ell", "15"}).code == cli::exit_code::kUsage);
    CHECK(run({"qexp", "--weight", "12", "--ell", "13", "--terms", "0"}).code == cli::exit_code::kUsage);
}

TEST_CASE("twist-search") {
    Run r = run({"twist-search", "--weight", "20", "--ell", "17"});
    CHECK(r.code == 0);
    CHECK(r.out.find("i = 2, k' = 16") != std::string::npos);
    CHECK(r.out.find("warning") == std::string::npos);

    r = run({"twist-search", "--weight", "26", "--ell", "13", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("i") == 1);
    CHECK(j.at("k_prime") == 12);
    CHECK(certificate_valid(certificate_from_json(j.at("certificate"))));
    CHECK(j.at("warnings").empty());

    r = run({"twist-search", "--weight", "22", "--ell", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("i = 0, k' = 12") != std::string::npos);
    CHECK(r.out.find("warning: published twist for (k, ell) = (22, 11) is (i, k') = (1, 12)") != std::string::npos);

    r = run({"twist-search", "--weight", "22", "--ell", "11", "--format", "json"});
    CHECK(Json::parse(r.out).at("warnings").size() == 1);

    CHECK(run({"twist-search", "--weight", "12", "--ell", "5"}).code == cli::exit_code::kNotFound);
}

TEST_CASE("verify-poly") {
    Run r = run({"verify-poly", "--weight", "22", "--ell", "19", "--pmax", "500"});
    CHECK(r.code == 0);
    CHECK(r.out.find("consistent to pmax = 500") != std::string::npos);

    r = run({"verify-poly", "--weight", "22", "--ell", "19", "--pmax", "1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("counts").at("fail") == 0);

    const auto bad = temp_file("modgal_mutated.txt",
                               "x^{12}-4*x^{11}+55*x^{9}-165*x^{8}+264*x^{7}-341*x^{6}+330*x^{5}-165*x^{4}-55*x^{3}+"
                               "99*x^{2}-40*x-111\n");
    r = run({"verify-poly", "--weight", "22", "--ell", "11", "--pmax", "200", "--poly-file", bad.string(), "--full"});
    CHECK(r.code == cli::exit_code::kVerificationFailed);
    CHECK(r.out.find("FAIL") != std::string::npos);

    r = run({"verify-poly", "--weight", "22", "--ell", "11", "--poly-file", "/nonexistent/poly.txt"});
    CHECK(r.code == cli::exit_code::kIo);

    const auto garbage = temp_file("modgal_garbage.txt", "x^2 + + 1\n");
    r = run({"verify-poly", "--weight", "22", "--ell", "11", "--poly-file", garbage.string()});
    CHECK(r.code == cli::exit_code::kUsage);
}

TEST_CASE("screen") {
    Run r = run({"screen", "--weight", "22", "--ell", "19", "--pbound", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: likely unexceptional") != std::string::npos);

    r = run({"screen", "--weight", "12", "--ell", "691", "--pbound", "100", "--format", "json"});
    const Json j = Json::parse(r.out);
    CHECK(j.at("reducible_candidate") == true);
    CHECK(j.at("reducible_j") == 0);

    r = run({"screen", "--weight", "26", "--ell", "23"});
    CHECK(r.out.find("verdict: likely unexceptional") != std::string::npos);
}

TEST_CASE("tables") {
    const Run a = run({"tables", "--pmax", "200"});
    CHECK(a.code == 0);
    CHECK(a.out.find("all checks passed") != std::string::npos);
    CHECK(a.out.find("warning: published twist for (k, ell) = (22, 11)") != std::string::npos);
    const Run b = run({"tables", "--pmax", "200"});
    CHECK(a.out == b.out);

    const Run js = run({"tables", "--pmax", "200", "--format", "json"});
    const Json doc = Json::parse(js.out);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("twists").size() == 6);
    CHECK(doc.at("polynomials").size() == 6);
    CHECK(doc.at("screens").size() == 6);

    const auto empty_dir = std::filesystem::temp_directory_path() / "modgal_empty_data";
    std::filesystem::create_directories(empty_dir);
    const Run missing = run({"tables", "--pmax", "50", "--data-dir", empty_dir.string()});
    CHECK(missing.code == cli::exit_code::kIo);
    CHECK(missing.err.find("cannot read polynomial file") != std::string::npos);
    // The run continues past the missing files.
    CHECK(missing.out.find("Theta twists") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::exit_code::kUsage);
    CHECK(run({"frobnicate"}).code == cli::exit_code::kUsage);
    CHECK(run({"qexp", "--ell", "13"}).code == cli::exit_code::kUsage);
    CHECK(run({"screen", "--weight", "12", "--ell", "13", "--format", "xml"}).code == cli::exit_code::kUsage);
    CHECK(run({"--help"}).code == 0);
}
