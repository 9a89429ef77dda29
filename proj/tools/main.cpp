#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "gaphase/dynamics.hpp"
#include "gaphase/format.hpp"
#include "gaphase/identities.hpp"
#include "gaphase/phase_space.hpp"
#include "gaphase/spha.hpp"

namespace {

using nlohmann::ordered_json;

gaphase::Signature parse_sig(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw gaphase::ParseError("signature must be 'p,q', got '" + text + "'");
    try {
        int p = std::stoi(text.substr(0, comma));
        int q = std::stoi(text.substr(comma + 1));
        return {p, q};
    } catch (const std::exception&) {
        throw gaphase::ParseError("signature must be 'p,q', got '" + text + "'");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw gaphase::Error("cannot open output file '" + out_path + "'");
    out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_table(const std::string& sig_text, const std::string& format, const std::string& out_path) {
    gaphase::Signature sig = parse_sig(sig_text);
    if (sig.n() > 6) throw gaphase::DimensionTooLarge("product table limited to n <= 6");
    std::vector<std::string> names;
    for (gaphase::BladeMask m = 0; m < sig.blade_count(); ++m) names.push_back(gaphase::blade_name(m));
    auto entry = [&](gaphase::BladeMask a, gaphase::BladeMask b) {
        auto prod = gaphase::blade_product(a, b, sig);
        return gaphase::render_signed_blade(prod.sign, prod.mask);
    };
    if (format == "json") {
        ordered_json j;
        j["signature"] = sig.str();
        j["blades"] = names;
        j["products"] = ordered_json::array();
        for (gaphase::BladeMask a = 0; a < sig.blade_count(); ++a) {
            ordered_json row = ordered_json::array();
            for (gaphase::BladeMask b = 0; b < sig.blade_count(); ++b) row.push_back(entry(a, b));
            j["products"].push_back(row);
        }
        emit(dump(j), out_path);
    } else {
        std::ostringstream text;
        text << "product table for Cl(" << sig.str() << ")\n";
        text << ".";
        for (const std::string& name : names) text << "\t" << name;
        text << "\n";
        for (gaphase::BladeMask a = 0; a < sig.blade_count(); ++a) {
            text << names[a];
            for (gaphase::BladeMask b = 0; b < sig.blade_count(); ++b) text << "\t" << entry(a, b);
            text << "\n";
        }
        emit(text.str(), out_path);
    }
    return 0;
}

int cmd_verify(const std::string& sig_text, std::string suites_csv, std::uint64_t seed,
               const std::string& format, const std::string& out_path) {
    gaphase::Signature sig = parse_sig(sig_text);
    std::vector<std::string> names;
    if (suites_csv.empty()) {
        names = gaphase::default_suites(sig);
    } else {
        std::istringstream in(suites_csv);
        std::string name;
        while (std::getline(in, name, ',')) names.push_back(name);
    }
    std::vector<gaphase::SuiteResult> results;
    bool all_passed = true;
    for (const std::string& name : names) {
        results.push_back(gaphase::run_suite(name, sig, seed));
        all_passed = all_passed && results.back().passed;
    }
    if (format == "json") {
        ordered_json j;
        j["signature"] = sig.str();
        j["seed"] = seed;
        j["suites"] = ordered_json::array();
        for (const auto& r : results) {
            ordered_json js;
            js["name"] = r.name;
            js["passed"] = r.passed;
            js["checks"] = r.checks;
            js["first_failure"] = r.first_failure;
            j["suites"].push_back(js);
        }
        j["passed"] = all_passed;
        emit(dump(j), out_path);
    } else {
        std::ostringstream text;
        text << "verify Cl(" << sig.str() << "), seed " << seed << "\n";
        for (const auto& r : results) {
            text << "  " << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checks
                 << " checks)";
            if (!r.passed) text << " first failure: " << r.first_failure;
            text << "\n";
        }
        text << "overall: " << (all_passed ? "pass" : "FAIL") << "\n";
        emit(text.str(), out_path);
    }
    return all_passed ? 0 : 1;
}

int cmd_decompose(const std::string& sig_text, const std::string& format, const std::string& out_path) {
    gaphase::Signature sig = parse_sig(sig_text);
    gaphase::phase::Decomposition d = gaphase::phase::decompose(sig);
    emit(format == "json" ? dump(gaphase::phase::to_json(d)) : gaphase::phase::to_text(d), out_path);
    return 0;
}

int cmd_audit(int n_max, const std::string& format, const std::string& out_path) {
    gaphase::phase::AuditReport report = gaphase::phase::audit_paper_claims(n_max);
    emit(format == "json" ? dump(gaphase::phase::to_json(report)) : gaphase::phase::to_text(report),
         out_path);
    return 0;
}

int cmd_spha(const std::string& sig_text, const std::string& ell, const std::string& R, bool rescaled,
             const std::string& format, const std::string& out_path) {
    gaphase::Signature sig = parse_sig(sig_text);
    gaphase::spha::Generators gens = gaphase::spha::build_generators(sig, gaphase::parse_rational(ell),
                                                                     gaphase::parse_rational(R), rescaled);
    gaphase::spha::Report report = gaphase::spha::verify_spha(gens);
    emit(format == "json" ? dump(gaphase::spha::to_json(report)) : gaphase::spha::to_text(report),
         out_path);
    bool lines_ok = true;
    for (const auto& line : report.lines) lines_ok = lines_ok && line.uniform;
    return (report.all_closed && report.antisymmetry_ok && report.jacobi_ok && lines_ok) ? 0 : 1;
}

int cmd_dynamics(const std::string& sig_text, int k, bool k_given, const std::string& blade,
                 const std::string& h_path, double dt, long steps, const std::string& scheme_name,
                 double x0, double p0, long stride, const std::string& out_path) {
    gaphase::Signature sig = parse_sig(sig_text);
    gaphase::dyn::PairBinding pair = blade.empty() ? gaphase::dyn::PairBinding::make_grade(sig, k)
                                                   : gaphase::dyn::PairBinding::make_grade(sig, 0);
    if (!blade.empty()) {
        gaphase::MultivectorQ mv = gaphase::parse_multivector(blade, sig);
        if (mv.terms().size() != 1 || mv.terms().begin()->second != 1)
            throw gaphase::ParseError("--blade must name a plain basis blade, got '" + blade + "'");
        pair = gaphase::dyn::PairBinding::make(sig, mv.terms().begin()->first);
        if (k_given && pair.k != k)
            throw gaphase::Error("--blade grade " + std::to_string(pair.k) +
                                 " contradicts --k " + std::to_string(k));
    }
    gaphase::dyn::HamiltonianSpec h = gaphase::dyn::HamiltonianSpec::load(h_path, pair);
    gaphase::dyn::Scheme scheme = gaphase::dyn::scheme_from_string(scheme_name);
    std::ostringstream csv;
    try {
        gaphase::dyn::Trajectory trajectory =
            gaphase::dyn::integrate(h, {x0, p0, 0.0}, dt, steps, scheme, stride);
        gaphase::dyn::write_csv(csv, trajectory);
        emit(csv.str(), out_path);
        return 0;
    } catch (const gaphase::dyn::NonFiniteState& e) {
        gaphase::dyn::write_csv(csv, e.partial());
        emit(csv.str(), out_path);
        std::cerr << "error: " << e.what() << " (partial trajectory written)\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Clifford-algebra phase-space toolkit"};
    app.require_subcommand(1);

    std::string sig_text = "3,0";
    std::string format = "text";
    std::string out_path;
    std::string suites;
    std::uint64_t seed = 0;
    int n_max = 6;
    std::string ell = "1";
    std::string R = "1";
    bool rescaled = false;
    int k = 1;
    std::string blade;
    std::string h_path;
    double dt = 1e-3;
    long steps = 1000;
    std::string scheme = "leapfrog";
    double x0 = 1.0;
    double p0 = 0.0;
    long stride = 1;

    auto add_common = [&](CLI::App* cmd, bool with_sig = true) {
        if (with_sig) cmd->add_option("--sig", sig_text, "algebra signature p,q")->capture_default_str();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* table = app.add_subcommand("table", "print the basis-blade product table");
    add_common(table);

    CLI::App* verify = app.add_subcommand("verify", "run exact identity suites");
    add_common(verify);
    verify->add_option("--suites", suites, "comma-separated subset of clifford,assoc,hodge,dual,norm");
    verify->add_option("--seed", seed, "seed for the randomised suites")->capture_default_str();

    CLI::App* decompose = app.add_subcommand("decompose", "conjugate subspace pairs of Cl(n)");
    add_common(decompose);

    CLI::App* audit = app.add_subcommand("audit", "computed commutation classes vs the parity rule");
    audit->add_option("--n-max", n_max, "audit dimensions 2..n_max")->capture_default_str();
    add_common(audit, false);

    CLI::App* spha = app.add_subcommand("spha", "verify the stabilised algebra bracket table");
    spha->add_option("--ell", ell, "length scale (rational)")->capture_default_str();
    spha->add_option("--R", R, "curvature radius (rational)")->capture_default_str();
    spha->add_flag("--rescaled", rescaled, "scale X by ell and P by 1/R");
    add_common(spha);

    CLI::App* dynamics = app.add_subcommand("dynamics", "integrate Hamilton's equations on one pair");
    // frees the short -h so the Hamiltonian-file option can be spelled --h
    dynamics->set_help_flag("--help", "print this help message and exit");
    dynamics->add_option("--sig", sig_text, "algebra signature p,q")->capture_default_str();
    dynamics->add_option("--k", k, "position grade")->capture_default_str();
    dynamics->add_option("--blade", blade, "position basis blade, e.g. e13 (default: lowest of grade k)");
    dynamics->add_option("--h", h_path, "Hamiltonian file: lines of '<coeff> <x_pow> <p_pow>'")
        ->required();
    dynamics->add_option("--dt", dt, "time step")->capture_default_str();
    dynamics->add_option("--steps", steps, "number of steps")->capture_default_str();
    dynamics->add_option("--scheme", scheme, "integration scheme")
        ->check(CLI::IsMember({"leapfrog", "euler", "rk4"}))
        ->capture_default_str();
    dynamics->add_option("--x0", x0, "initial position coordinate")->capture_default_str();
    dynamics->add_option("--p0", p0, "initial momentum coordinate")->capture_default_str();
    dynamics->add_option("--stride", stride, "record every N-th step")->capture_default_str();
    dynamics->add_option("--out", out_path, "write CSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return cmd_table(sig_text, format, out_path);
        if (verify->parsed()) return cmd_verify(sig_text, suites, seed, format, out_path);
        if (decompose->parsed()) return cmd_decompose(sig_text, format, out_path);
        if (audit->parsed()) return cmd_audit(n_max, format, out_path);
        if (spha->parsed()) return cmd_spha(sig_text, ell, R, rescaled, format, out_path);
        if (dynamics->parsed())
            return cmd_dynamics(sig_text, k, dynamics->count("--k") > 0, blade, h_path, dt, steps, scheme,
                                x0, p0, stride, out_path);
    } catch (const gaphase::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
