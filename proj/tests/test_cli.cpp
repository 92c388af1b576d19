#include <doctest.h>

#include <json.hpp>

#include <locale>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Invocation {
    int code = -1;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "nlhv");
    std::ostringstream out;
    std::ostringstream err;
    Invocation r;
    r.code = nlhv::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        result.push_back(line);
    }
    return result;
}

std::vector<double> csv_fields(const std::string& line) {
    std::vector<double> fields;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        fields.push_back(std::stod(cell));
    }
    return fields;
}

}  // namespace

TEST_CASE("scan csv over the three canonical angles") {
    const Invocation r = run({"scan", "--phi-min", "0", "--phi-max", "180", "--step", "90"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "phi_deg,E_quantum,bound_lower,bound_upper,violation");
    const double expected_phi[] = {0.0, 90.0, 180.0};
    for (int i = 0; i < 3; ++i) {
        const auto f = csv_fields(rows[i + 1]);
        REQUIRE(f.size() == 5);
        CHECK(f[0] == expected_phi[i]);
        CHECK(f[4] == 0.0);
    }
    CHECK(rows[1] == "0,1,0,1,0");
    CHECK(rows[3] == "180,-1,-1,0,0");
    CHECK(r.out.find('\r') == std::string::npos);
    CHECK(r.out.back() == '\n');
}

TEST_CASE("scan rows inside the violation range") {
    const Invocation r = run({"scan", "--phi-min", "25", "--phi-max", "35", "--step", "5"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    double previous = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = csv_fields(rows[i]);
        CHECK(f[0] > previous);
        previous = f[0];
        CHECK(f[4] > 0.0);
        CHECK(f[4] == doctest::Approx(std::max({0.0, f[1] - f[3], f[2] - f[1]})));
    }
}

TEST_CASE("scan output is byte-for-byte deterministic and locale independent") {
    const std::vector<std::string> args{"scan", "--step", "0.5"};
    const Invocation first = run(args);
    try {
        std::locale::global(std::locale("de_DE.UTF-8"));
    } catch (const std::runtime_error&) {
        // locale not installed; the repeat still checks determinism
    }
    const Invocation second = run(args);
    std::locale::global(std::locale::classic());
    CHECK(first.out == second.out);
    CHECK(lines(first.out).size() == 362);
}

TEST_CASE("scan json carries metadata") {
    const Invocation r = run({"scan", "--phi-min", "10", "--phi-max", "20", "--step", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["metadata"]["version"] == nlhv::cli::kVersion);
    CHECK(doc["metadata"]["seed"].is_null());
    CHECK(doc["metadata"]["command_line"].get<std::string>().find("scan") != std::string::npos);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][2]["phi_deg"] == 20.0);
}

TEST_CASE("scan rejects bad ranges") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"scan", "--phi-min", "90", "--phi-max", "10"},
             {"scan", "--phi-min", "0", "--phi-max", "190"},
             {"scan", "--step", "0"},
             {"scan", "--phi-min", "-5"}}) {
        const Invocation r = run(args);
        CHECK(r.code == nlhv::cli::kUsageError);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("bounds subcommand") {
    const Invocation closed = run({"bounds", "--phi", "90", "--format", "json"});
    REQUIRE(closed.code == 0);
    const auto c = nlohmann::json::parse(closed.out);
    CHECK(c["bound_lower"].get<double>() == doctest::Approx(-0.2928932).epsilon(1e-7));
    CHECK(c["bound_upper"].get<double>() == doctest::Approx(0.2928932).epsilon(1e-7));

    const Invocation zero = run({"bounds", "--phi", "0"});
    REQUIRE(zero.code == 0);
    CHECK(zero.out.find("bound_lower: 0\n") != std::string::npos);
    CHECK(zero.out.find("bound_upper: 1\n") != std::string::npos);

    const Invocation quad = run({"bounds", "--phi", "90", "--method", "quadrature", "--order", "200", "--format", "json"});
    REQUIRE(quad.code == 0);
    CHECK(nlohmann::json::parse(quad.out)["deviation"].get<double>() < 1e-6);

    CHECK(run({"bounds", "--phi", "200"}).code == nlhv::cli::kUsageError);
    CHECK(run({"bounds", "--phi", "90", "--method", "simpson"}).code == nlhv::cli::kUsageError);
}

TEST_CASE("max-violation subcommand") {
    const Invocation r = run({"max-violation", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["phi_star_deg"].get<double>() == doctest::Approx(28.955).epsilon(1e-4));
    CHECK(doc["phi_mirror_deg"].get<double>() == doctest::Approx(151.045).epsilon(1e-4));
    CHECK(doc["v_star"].get<double>() == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(doc["reported_phi_star_deg"].get<double>() == 28.8);
    CHECK(doc["reported_phi_mirror_deg"].get<double>() == 151.2);

    const Invocation text = run({"max-violation", "--tol", "1e-8"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("reported_phi_star_deg: 28.8\n") != std::string::npos);
    CHECK(run({"max-violation", "--tol", "0"}).code == nlhv::cli::kUsageError);
}

TEST_CASE("simulate subcommand") {
    const Invocation strong = run({"simulate", "--phi", "28.955", "--pairs", "1000000", "--seed", "42"});
    REQUIRE(strong.code == 0);
    const auto doc = nlohmann::json::parse(strong.out);
    CHECK(doc["violation_sigma"].get<double>() > 100.0);
    CHECK(doc["metadata"]["seed"] == 42);
    CHECK(doc["pairs"] == 1000000);
    const auto& counts = doc["counts"];
    CHECK(counts["pp"].get<std::uint64_t>() + counts["pm"].get<std::uint64_t>() + counts["mp"].get<std::uint64_t>() +
              counts["mm"].get<std::uint64_t>() ==
          1000000);

    const Invocation none = run({"simulate", "--phi", "90", "--pairs", "1000000"});
    REQUIRE(none.code == 0);
    CHECK(nlohmann::json::parse(none.out)["violation_sigma"].get<double>() < 0.0);

    const Invocation zero = run({"simulate", "--phi", "90", "--pairs", "0"});
    CHECK(zero.code != 0);
    CHECK_FALSE(zero.err.empty());
}

TEST_CASE("simulate csv is independent of the worker count") {
    const Invocation one = run({"simulate", "--phi", "40", "--pairs", "300000", "--seed", "9", "--format", "csv"});
    const Invocation four =
        run({"simulate", "--phi", "40", "--pairs", "300000", "--seed", "9", "--format", "csv", "--workers", "4"});
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(lines(one.out)[0] == "phi_deg,pairs,seed,parity,n_pp,n_pm,n_mp,n_mm,e_hat,std_err,violation_sigma");
}

TEST_CASE("verify subcommand") {
    const Invocation states = run({"verify", "states"});
    CHECK(states.code == 0);
    CHECK(states.out.find("FAIL") == std::string::npos);
    CHECK(states.out.find("eigenrelation") != std::string::npos);

    const Invocation impossible = run({"verify", "integrals", "--tol", "1e-30"});
    CHECK(impossible.code == nlhv::cli::kVerificationFailure);
    CHECK(impossible.out.find("FAIL") != std::string::npos);

    CHECK(run({"verify", "nonsense"}).code == nlhv::cli::kUsageError);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == nlhv::cli::kUsageError);
    CHECK(run({"frobnicate"}).code == nlhv::cli::kUsageError);
    CHECK(run({"--help"}).code == 0);
}
