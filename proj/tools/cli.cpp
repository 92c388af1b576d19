#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "nlhv/experiment.hpp"
#include "nlhv/leggett.hpp"
#include "nlhv/verify.hpp"

namespace nlhv::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& args) {
    std::string s;
    for (const std::string& a : args) {
        if (!s.empty()) {
            s += ' ';
        }
        s += a;
    }
    return s;
}

json metadata(const std::vector<std::string>& args, std::optional<std::uint64_t> seed) {
    json m;
    m["version"] = kVersion;
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["command_line"] = join(args);
    return m;
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct ScanArgs {
    double phi_min = 0.0;
    double phi_max = 180.0;
    double step = 1.0;
    std::string format = "csv";
};

struct BoundsArgs {
    double phi = 90.0;
    std::string method = "closed";
    int order = 200;
    std::string format = "text";
};

struct MaxViolationArgs {
    double tol = 1e-6;
    std::string format = "text";
};

struct SimulateArgs {
    double phi = 0.0;
    std::uint64_t pairs = 1000000;
    std::uint64_t seed = 42;
    std::string parity = "odd";
    std::string format = "json";
    unsigned workers = 1;
};

struct VerifyArgs {
    std::string suite = "all";
    std::optional<double> tol;
    std::uint64_t seed = VerifyOptions{}.seed;
};

int cmd_scan(const ScanArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    if (!(std::isfinite(a.phi_min) && std::isfinite(a.phi_max) && 0.0 <= a.phi_min && a.phi_min < a.phi_max &&
          a.phi_max <= 180.0)) {
        throw std::invalid_argument("scan range must satisfy 0 <= phi-min < phi-max <= 180");
    }
    if (!(a.step > 0.0) || !std::isfinite(a.step)) {
        throw std::invalid_argument("step must be positive");
    }
    const auto count = static_cast<std::uint64_t>(std::floor((a.phi_max - a.phi_min) / a.step + 1e-9)) + 1;

    json rows = json::array();
    if (a.format == "csv") {
        out << "phi_deg,E_quantum,bound_lower,bound_upper,violation\n";
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        const double deg = std::min(a.phi_min + static_cast<double>(i) * a.step, a.phi_max);
        const ViolationReport r = violation_at(relative_angle_from_degrees(deg));
        if (a.format == "csv") {
            out << format_number(deg) << ',' << format_number(r.quantum_value) << ','
                << format_number(r.bounds.lower) << ',' << format_number(r.bounds.upper) << ','
                << format_number(r.violation) << '\n';
        } else {
            rows.push_back({{"phi_deg", deg},
                            {"E_quantum", r.quantum_value},
                            {"bound_lower", r.bounds.lower},
                            {"bound_upper", r.bounds.upper},
                            {"violation", r.violation}});
        }
    }
    if (a.format == "json") {
        write_json(out, {{"metadata", metadata(args, std::nullopt)}, {"rows", rows}});
    }
    return kSuccess;
}

int cmd_bounds(const BoundsArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    const double phi = relative_angle_from_degrees(a.phi);
    const CorrelationBounds exact = bounds_closed_form(phi);

    json doc;
    doc["metadata"] = metadata(args, std::nullopt);
    doc["phi_deg"] = a.phi;
    doc["method"] = a.method;
    if (a.method == "closed") {
        doc["bound_lower"] = exact.lower;
        doc["bound_upper"] = exact.upper;
    } else {
        const auto [va, vb] = analyzer_pair(phi);
        const CorrelationBounds numeric = bounds_by_integration(va, vb, QuadratureSpec::product_rule(a.order));
        doc["order"] = a.order;
        doc["bound_lower"] = numeric.lower;
        doc["bound_upper"] = numeric.upper;
        doc["closed_lower"] = exact.lower;
        doc["closed_upper"] = exact.upper;
        doc["deviation"] = std::max(std::abs(numeric.lower - exact.lower), std::abs(numeric.upper - exact.upper));
    }

    if (a.format == "json") {
        write_json(out, doc);
        return kSuccess;
    }
    for (const auto& [key, value] : doc.items()) {
        if (key == "metadata") {
            continue;
        }
        out << key << ": " << (value.is_number_float() ? format_number(value.get<double>()) : value.dump()) << '\n';
    }
    return kSuccess;
}

int cmd_max_violation(const MaxViolationArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    const MaxViolation best = max_violation(a.tol);
    json doc;
    doc["metadata"] = metadata(args, std::nullopt);
    doc["phi_star_deg"] = rad_to_deg(best.phi_star);
    doc["phi_mirror_deg"] = rad_to_deg(best.phi_mirror);
    doc["v_star"] = best.v_star;
    doc["exact_phi_star_deg"] = rad_to_deg(2.0 * std::asin(0.25));
    doc["reported_phi_star_deg"] = kReportedMaximizerDeg;
    doc["reported_phi_mirror_deg"] = kReportedMirrorMaximizerDeg;
    doc["reported_minus_computed_deg"] = kReportedMaximizerDeg - rad_to_deg(best.phi_star);

    if (a.format == "json") {
        write_json(out, doc);
        return kSuccess;
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "metadata") {
            out << key << ": " << format_number(value.get<double>()) << '\n';
        }
    }
    return kSuccess;
}

int cmd_simulate(const SimulateArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    if (a.pairs < 1) {
        throw std::invalid_argument("pairs must be at least 1");
    }
    const Parity parity = a.parity == "odd" ? Parity::odd : Parity::even;
    const SimulatedRun run = simulate_at_angle(relative_angle_from_degrees(a.phi), a.pairs, a.seed, parity, a.workers);
    const double sigma = run.estimate.violation_sigma.value_or(0.0);

    if (a.format == "csv") {
        out << "phi_deg,pairs,seed,parity,n_pp,n_pm,n_mp,n_mm,e_hat,std_err,violation_sigma\n";
        out << format_number(a.phi) << ',' << a.pairs << ',' << a.seed << ',' << a.parity << ',' << run.counts.n_pp
            << ',' << run.counts.n_pm << ',' << run.counts.n_mp << ',' << run.counts.n_mm << ','
            << format_number(run.estimate.e_hat) << ',' << format_number(run.estimate.std_err) << ','
            << format_number(sigma) << '\n';
        return kSuccess;
    }
    json doc;
    doc["metadata"] = metadata(args, a.seed);
    doc["phi_deg"] = a.phi;
    doc["pairs"] = a.pairs;
    doc["seed"] = a.seed;
    doc["parity"] = a.parity;
    doc["counts"] = {{"pp", run.counts.n_pp}, {"pm", run.counts.n_pm}, {"mp", run.counts.n_mp}, {"mm", run.counts.n_mm}};
    doc["e_hat"] = run.estimate.e_hat;
    doc["std_err"] = run.estimate.std_err;
    doc["violation_sigma"] = sigma;
    write_json(out, doc);
    return kSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    static const std::map<std::string, Suite> suites{
        {"states", Suite::states}, {"integrals", Suite::integrals}, {"all", Suite::all}};
    VerifyOptions options;
    options.tolerance = a.tol;
    options.seed = a.seed;
    const std::vector<CheckResult> results = run_suite(suites.at(a.suite), options);
    for (const CheckResult& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << format_number(r.measure)
            << (r.passed ? " <= " : " > ") << format_number(r.threshold) << ")\n";
    }
    const bool ok = all_passed(results);
    out << (ok ? "all checks passed" : "verification failed") << '\n';
    return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf, end);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leggett-type bounds on two-photon polarization correlations"};
    app.name(args.empty() ? "nlhv" : args.front());
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Quantum value, bounds and violation over an angle grid");
    scan_cmd->add_option("--phi-min", scan.phi_min, "First angle [deg]")->capture_default_str();
    scan_cmd->add_option("--phi-max", scan.phi_max, "Last angle [deg]")->capture_default_str();
    scan_cmd->add_option("--step", scan.step, "Grid step [deg]")->capture_default_str();
    scan_cmd->add_option("--format", scan.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Bounds at one angle, closed form or by sphere quadrature");
    bounds_cmd->add_option("--phi", bounds.phi, "Angle between the analyzers [deg]")->required();
    bounds_cmd->add_option("--method", bounds.method)->check(CLI::IsMember({"closed", "quadrature"}))->capture_default_str();
    bounds_cmd->add_option("--order", bounds.order, "Quadrature nodes per dimension")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    bounds_cmd->add_option("--format", bounds.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    MaxViolationArgs maxv;
    auto* max_cmd = app.add_subcommand("max-violation", "Angle and size of the largest violation");
    max_cmd->add_option("--tol", maxv.tol, "Bracket width [rad]")->check(CLI::PositiveNumber)->capture_default_str();
    max_cmd->add_option("--format", maxv.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Simulated run with finite statistics");
    sim_cmd->add_option("--phi", sim.phi, "Angle between the analyzers [deg]")->required();
    sim_cmd->add_option("--pairs", sim.pairs)->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed)->capture_default_str();
    sim_cmd->add_option("--parity", sim.parity)->check(CLI::IsMember({"odd", "even"}))->capture_default_str();
    sim_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sim_cmd->add_option("--workers", sim.workers, "Threads; results do not depend on it")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run the self-verification suites");
    verify_cmd->add_option("suite", ver.suite)->check(CLI::IsMember({"states", "integrals", "all"}))->capture_default_str();
    verify_cmd->add_option("--tol", ver.tol, "Override every check's tolerance");
    verify_cmd->add_option("--seed", ver.seed)->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (scan_cmd->parsed()) {
            return cmd_scan(scan, args, out);
        }
        if (bounds_cmd->parsed()) {
            return cmd_bounds(bounds, args, out);
        }
        if (max_cmd->parsed()) {
            return cmd_max_violation(maxv, args, out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim, args, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(ver, out);
        }
    } catch (const std::exception& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace nlhv::cli
