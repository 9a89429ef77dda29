// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds. Criterion 9 needs the CLI binary path as argv[1].
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gaphase/dynamics.hpp"
#include "gaphase/identities.hpp"
#include "gaphase/phase_space.hpp"
#include "gaphase/spha.hpp"

using namespace gaphase;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d %s: %s (%s)\n", number, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++failures;
}

int dual_sign(int k, int n) { return (k * (n - k)) % 2 == 0 ? 1 : -1; }

// ---- criteria 1-3: exact Hodge identities over Cl(1)..Cl(6) ----

void hodge_relation() {
    long checks = 0, mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
        Signature sig = Signature::euclidean(n);
        for (BladeMask a = 0; a < sig.blade_count(); ++a)
            for (BladeMask b = 0; b < sig.blade_count(); ++b) {
                if (grade_of(a) != grade_of(b)) continue;
                ++checks;
                if (!hodge_relation_check(MultivectorQ::basis_blade(sig, a),
                                          MultivectorQ::basis_blade(sig, b))
                         .equal)
                    ++mismatches;
            }
    }
    report(1, "hodge-relation", mismatches == 0,
           std::to_string(checks) + " same-grade pairs, " + std::to_string(mismatches) + " mismatches");
}

void double_dual() {
    long checks = 0, mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
        Signature sig = Signature::euclidean(n);
        for (BladeMask m = 0; m < sig.blade_count(); ++m) {
            ++checks;
            MultivectorQ b = MultivectorQ::basis_blade(sig, m);
            if (hodge_dual(hodge_dual(b)) != b * Rational(dual_sign(grade_of(m), n))) ++mismatches;
        }
    }
    report(2, "double-dual-sign", mismatches == 0,
           std::to_string(checks) + " blades, " + std::to_string(mismatches) + " mismatches");
}

void dual_norm() {
    long checks = 0, mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
        Signature sig = Signature::euclidean(n);
        for (BladeMask m = 0; m < sig.blade_count(); ++m) {
            ++checks;
            MultivectorQ b = MultivectorQ::basis_blade(sig, m);
            if (inner(hodge_dual(b), hodge_dual(b)) != inner(b, b)) ++mismatches;
        }
    }
    report(3, "dual-norm", mismatches == 0,
           std::to_string(checks) + " blades, " + std::to_string(mismatches) + " mismatches");
}

// ---- criterion 4: X wedge P = I and the P X sign law ----

void pair_normalisation() {
    long checks = 0, mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
        Signature sig = Signature::euclidean(n);
        MultivectorQ pseudo = MultivectorQ::pseudoscalar(sig);
        for (BladeMask m = 0; m < sig.blade_count(); ++m) {
            MultivectorQ x = MultivectorQ::basis_blade(sig, m);
            MultivectorQ p = phase::momentum_of(x);
            ++checks;
            if (wedge(x, p) != pseudo) ++mismatches;
            ++checks;
            if (p * x != (x * p) * Rational(dual_sign(grade_of(m), n))) ++mismatches;
        }
    }
    report(4, "pair-normalisation", mismatches == 0,
           std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches");
}

// ---- criterion 5: the claims audit completes with every row populated ----

void claims_audit() {
    phase::AuditReport r = phase::audit_paper_claims(6);
    bool ok = r.rows.size() == 15;
    int undefined = 0;
    for (const phase::AuditRow& row : r.rows) {
        bool odd = (row.k * (row.n - row.k)) % 2 != 0;
        if (odd) {
            ++undefined;
            ok = ok && !row.paper_parity_defined && !row.paper_class && !row.agree;
        } else {
            ok = ok && row.paper_parity_defined && row.paper_class.has_value() && row.agree.has_value();
        }
    }
    ok = ok && r.worked_examples.size() == 3;
    report(5, "claims-audit", ok,
           std::to_string(r.rows.size()) + " rows, " + std::to_string(undefined) +
               " flagged parity-undefined, " + std::to_string(r.worked_examples.size()) +
               " worked examples checked");
}

// ---- criterion 6: generator table closure in Cl(4,0) and Cl(3,1) ----

void spha_closure() {
    bool ok = true;
    std::string detail;
    for (Signature sig : {Signature(4, 0), Signature(3, 1)}) {
        spha::Report r = spha::verify_spha(spha::build_generators(sig));
        bool uniform = true;
        for (const spha::LineSummary& line : r.lines) uniform = uniform && line.uniform;
        bool this_ok = r.pair_count == 105 && r.all_closed && r.jacobi_ok && uniform;
        ok = ok && this_ok;
        if (!detail.empty()) detail += "; ";
        detail += "Cl(" + sig.str() + "): " + std::to_string(r.pair_count) + " brackets, closure " +
                  (r.all_closed ? "ok" : "BROKEN") + ", Jacobi " + (r.jacobi_ok ? "ok" : "BROKEN") +
                  ", lines " + (uniform ? "uniform" : "NOT UNIFORM");
    }
    report(6, "spha-closure", ok, detail);
}

// ---- criterion 7: oscillator dynamics with pinned tolerances ----

double max_energy_error(const dyn::Trajectory& t) {
    double h0 = t.samples.front().H;
    double out = 0.0;
    for (const dyn::Sample& s : t.samples) out = std::max(out, std::abs(s.H - h0));
    return out;
}

void oscillator_dynamics() {
    dyn::PairBinding pair = dyn::PairBinding::make_grade(Signature(3, 0), 1);
    dyn::HamiltonianSpec h(pair, {{Rational(1, 2), 2, 0}, {Rational(1, 2), 0, 2}});

    dyn::Trajectory t = dyn::integrate(h, {1.0, 0.0}, 1e-3, 10000, dyn::Scheme::Leapfrog);
    double max_pos = 0.0;
    for (const dyn::Sample& s : t.samples) max_pos = std::max(max_pos, std::abs(s.x - std::cos(s.t)));
    double max_dh = max_energy_error(t);
    double max_dh_half = max_energy_error(dyn::integrate(h, {1.0, 0.0}, 5e-4, 20000, dyn::Scheme::Leapfrog));
    double ratio = max_dh / max_dh_half;

    bool pos_ok = max_pos <= 1e-6;
    bool energy_ok = max_dh <= 1e-9;
    bool order_ok = ratio >= 3.5;
    char detail[256];
    // The energy bound cannot hold at this step size: leapfrog's sampled
    // energy error oscillates with amplitude dt^2/8 = 1.25e-7 at dt = 1e-3.
    std::snprintf(detail, sizeof(detail),
                  "max|x-cos t| = %.3e (<= 1e-6: %s), max|dH| = %.3e (<= 1e-9: %s), "
                  "halving ratio = %.2f (>= 3.5: %s)",
                  max_pos, pos_ok ? "yes" : "no", max_dh, energy_ok ? "yes" : "NO", ratio,
                  order_ok ? "yes" : "no");
    report(7, "oscillator-dynamics", pos_ok && energy_ok && order_ok, detail);
}

// ---- criterion 8: bracket symmetry class, Leibniz, {x,p} = I ----

dyn::HamiltonianSpec random_poly(const dyn::PairBinding& pair, std::mt19937_64& rng) {
    std::vector<dyn::Term> terms;
    std::size_t count = 2 + rng() % 4;
    for (std::size_t i = 0; i < count; ++i) {
        long coeff = static_cast<long>(rng() % 19) - 9;
        terms.push_back({Rational(coeff), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    }
    return dyn::HamiltonianSpec(pair, std::move(terms));
}

void bracket_algebra() {
    std::mt19937_64 rng(20250814);
    bool ok = true;
    std::string detail;
    for (Signature sig : {Signature(3, 0), Signature(4, 0)}) {
        dyn::PairBinding pair = dyn::PairBinding::make_grade(sig, 1);
        int s = *pair.comm_class == phase::CommClass::Commuting ? -1 : 1;
        int sym_fail = 0, leibniz_fail = 0;
        for (int trial = 0; trial < 100; ++trial) {
            dyn::HamiltonianSpec f = random_poly(pair, rng);
            dyn::HamiltonianSpec g = random_poly(pair, rng);
            dyn::HamiltonianSpec k = random_poly(pair, rng);
            if (!(dyn::poisson_bracket_poly(f, g) == dyn::poisson_bracket_poly(g, f) * Rational(s)))
                ++sym_fail;
            if (!(dyn::poisson_bracket_poly(f, g * k) ==
                  dyn::poisson_bracket_poly(f, g) * k + g * dyn::poisson_bracket_poly(f, k)))
                ++leibniz_fail;
        }
        dyn::HamiltonianSpec x(pair, {{1, 1, 0}});
        dyn::HamiltonianSpec p(pair, {{1, 0, 1}});
        bool canonical = dyn::poisson_bracket_poly(x, p) == dyn::HamiltonianSpec(pair, {{1, 0, 0}}) &&
                         dyn::poisson_bracket(x, p, {0.3, -0.8}) ==
                             MultivectorD::basis_blade(sig, sig.pseudoscalar_mask(), 1.0);
        ok = ok && sym_fail == 0 && leibniz_fail == 0 && canonical;
        if (!detail.empty()) detail += "; ";
        detail += "Cl(" + sig.str() + ") " + phase::to_string(*pair.comm_class) + ": 100 symmetry (" +
                  std::to_string(sym_fail) + " bad), 100 Leibniz (" + std::to_string(leibniz_fail) +
                  " bad), {x,p}=I " + (canonical ? "ok" : "BROKEN");
    }
    report(8, "bracket-algebra", ok, detail);
}

// ---- criterion 9: byte-identical reruns of the reporting verbs ----

struct RunResult {
    int status;
    std::string output;
};

RunResult run(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

void determinism(const char* cli) {
    if (!cli) {
        report(9, "determinism", false, "no CLI path given; pass it as argv[1]");
        return;
    }
    const std::vector<std::string> commands = {
        "verify --sig 3,0 --seed 7 --format json",
        "verify --sig 3,1 --seed 7 --format text",
        "audit --n-max 6 --format json",
        "spha --sig 4,0 --format json",
        "spha --sig 3,1 --format text",
    };
    int compared = 0, different = 0, failed = 0;
    for (const std::string& args : commands) {
        std::string command = std::string("\"") + cli + "\" " + args + " 2>/dev/null";
        RunResult first = run(command);
        RunResult second = run(command);
        ++compared;
        if (first.status != 0 || second.status != 0) ++failed;
        if (first.output != second.output || first.output.empty()) ++different;
    }
    report(9, "determinism", different == 0 && failed == 0,
           std::to_string(compared) + " commands run twice, " + std::to_string(different) +
               " byte differences, " + std::to_string(failed) + " nonzero exits");
}

}  // namespace

int main(int argc, char** argv) {
    hodge_relation();
    double_dual();
    dual_norm();
    pair_normalisation();
    claims_audit();
    spha_closure();
    oscillator_dynamics();
    bracket_algebra();
    determinism(argc > 1 ? argv[1] : nullptr);

    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
