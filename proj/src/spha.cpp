#include "gaphase/spha.hpp"

#include <array>
#include <sstream>

#include "gaphase/format.hpp"

namespace gaphase::spha {

namespace {

// gamma_a as basis-vector indices (1-based) in a-order.
std::array<int, 4> gamma_indices(const Signature& sig) {
    if (sig == Signature(4, 0)) return {1, 2, 3, 4};
    if (sig == Signature(3, 1)) return {4, 1, 2, 3};  // gamma_0 = e4 squares to -1
    throw UnsupportedSignature("generators exist for Cl(4,0) and Cl(3,1) only, got (" + sig.str() + ")");
}

}  // namespace

const MultivectorQ& Generators::m(int a, int b) const {
    for (std::size_t i = 0; i < m_index.size(); ++i)
        if (m_index[i] == std::make_pair(a, b)) return M[i];
    throw Error("no rotation generator M" + std::to_string(a) + std::to_string(b));
}

Generators build_generators(const Signature& sig, const Rational& ell, const Rational& R, bool rescaled) {
    auto idx = gamma_indices(sig);
    if (ell <= 0) throw Error("ell must be positive");
    if (R <= 0) throw Error("R must be positive");
    std::vector<MultivectorQ> gamma;
    for (int a = 0; a < 4; ++a) gamma.push_back(MultivectorQ::basis_vector(sig, idx[a]));

    Generators g{sig, {}, {}, {}, {}, MultivectorQ::pseudoscalar(sig), {}, ell, R, rescaled};
    for (int a = 0; a < 4; ++a) {
        g.eta[a] = sig.metric_sign(idx[a] - 1);
        g.X.push_back(rescaled ? gamma[a] * ell : gamma[a]);
        MultivectorQ star = hodge_dual(gamma[a]);
        g.P.push_back(rescaled ? star * (Rational(1) / R) : star);
    }
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            g.m_index.emplace_back(a, b);
            g.M.push_back(gamma[a] * gamma[b]);
        }
    return g;
}

namespace {

struct Fit {
    bool match;
    std::optional<Rational> constant;
};

// Is C an exact scalar multiple of the pattern? A zero pattern demands a
// zero commutator.
Fit fit_pattern(const MultivectorQ& c, const MultivectorQ& pattern) {
    if (pattern.is_zero()) return {c.is_zero(), std::nullopt};
    if (c.is_zero()) return {true, Rational(0)};
    const auto& [mask, coeff] = *pattern.terms().begin();
    Rational ratio = c.coefficient(mask) / coeff;
    if (c == pattern * ratio) return {true, ratio};
    return {false, std::nullopt};
}

struct Instance {
    std::string lhs, rhs;        // labels in canonical generator order
    MultivectorQ result;         // [lhs, rhs]
    MultivectorQ oriented;       // commutator in the table-line orientation
    MultivectorQ pattern;
    std::string line;
};

class TableBuilder {
public:
    explicit TableBuilder(const Generators& g) : g_(g), zero_(g.sig) {
        for (int a = 0; a < 4; ++a) labeled_.emplace_back("X" + std::to_string(a), g.X[a]);
        for (int a = 0; a < 4; ++a) labeled_.emplace_back("P" + std::to_string(a), g.P[a]);
        for (std::size_t i = 0; i < g.M.size(); ++i)
            labeled_.emplace_back("M" + std::to_string(g.m_index[i].first) + std::to_string(g.m_index[i].second),
                                  g.M[i]);
        labeled_.emplace_back("I", g.I);
    }

    const std::vector<std::pair<std::string, MultivectorQ>>& generators() const { return labeled_; }

    // Signed rotation generator M_(a,b) for arbitrary index order.
    MultivectorQ mat(int a, int b) const {
        if (a == b) return zero_;
        return a < b ? g_.m(a, b) : -g_.m(b, a);
    }

    MultivectorQ eta_times(const MultivectorQ& mv, int a, int b) const {
        return a == b ? mv * Rational(g_.eta[a]) : zero_;
    }

    std::vector<Instance> instances() const {
        std::vector<Instance> out;
        auto comm = [](const MultivectorQ& x, const MultivectorQ& y) { return commutator(x, y); };
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
                out.push_back(make("X" + std::to_string(a), "X" + std::to_string(b),
                                   comm(g_.X[a], g_.X[b]), false, mat(a, b), "[X,X]"));
                out.push_back(make("P" + std::to_string(a), "P" + std::to_string(b),
                                   comm(g_.P[a], g_.P[b]), false, mat(a, b), "[P,P]"));
            }
            for (int b = 0; b < 4; ++b)
                out.push_back(make("X" + std::to_string(a), "P" + std::to_string(b),
                                   comm(g_.X[a], g_.P[b]), false, eta_times(g_.I, a, b), "[X,P]"));
            out.push_back(make("X" + std::to_string(a), "I", comm(g_.X[a], g_.I), false, g_.P[a], "[X,I]"));
            out.push_back(make("P" + std::to_string(a), "I", comm(g_.P[a], g_.I), false, g_.X[a], "[P,I]"));
        }
        for (std::size_t i = 0; i < g_.M.size(); ++i) {
            auto [a, b] = g_.m_index[i];
            std::string ml = "M" + std::to_string(a) + std::to_string(b);
            for (int c = 0; c < 4; ++c) {
                MultivectorQ pat_x = eta_times(g_.X[a], b, c) - eta_times(g_.X[b], a, c);
                MultivectorQ pat_p = eta_times(g_.P[a], b, c) - eta_times(g_.P[b], a, c);
                // Entries are labeled (X_c, M_ab) to follow generator order,
                // but the table line reads [M_ab, X_c]; fit in that sense.
                out.push_back(make("X" + std::to_string(c), ml, comm(g_.X[c], g_.M[i]), true, pat_x, "[M,X]"));
                out.push_back(make("P" + std::to_string(c), ml, comm(g_.P[c], g_.M[i]), true, pat_p, "[M,P]"));
            }
            for (std::size_t j = i + 1; j < g_.M.size(); ++j) {
                auto [c, d] = g_.m_index[j];
                MultivectorQ pat = zero_;
                pat += b == c ? mat(a, d) * Rational(g_.eta[b]) : zero_;
                pat += a == d ? mat(b, c) * Rational(g_.eta[a]) : zero_;
                pat -= a == c ? mat(b, d) * Rational(g_.eta[a]) : zero_;
                pat -= b == d ? mat(a, c) * Rational(g_.eta[b]) : zero_;
                out.push_back(make(ml, "M" + std::to_string(c) + std::to_string(d),
                                   comm(g_.M[i], g_.M[j]), false, pat, "[M,M]"));
            }
            out.push_back(make(ml, "I", comm(g_.M[i], g_.I), false, zero_, "[M,I]"));
        }
        return out;
    }

private:
    Instance make(std::string lhs, std::string rhs, MultivectorQ result, bool flip, MultivectorQ pattern,
                  std::string line) const {
        Instance inst{std::move(lhs), std::move(rhs), result, flip ? -result : std::move(result),
                      std::move(pattern), std::move(line)};
        return inst;
    }

    const Generators& g_;
    MultivectorQ zero_;
    std::vector<std::pair<std::string, MultivectorQ>> labeled_;
};

const std::vector<std::string>& line_order() {
    static const std::vector<std::string> order{"[X,X]", "[X,P]", "[P,P]", "[X,I]", "[P,I]",
                                                "[M,X]", "[M,P]", "[M,M]", "[M,I]"};
    return order;
}

ParameterisationCheck check_parameterisation(const std::vector<LineSummary>& lines) {
    ParameterisationCheck out{true, std::nullopt, std::nullopt, std::nullopt, {}};
    auto find = [&](const std::string& name) -> const LineSummary& {
        for (const LineSummary& l : lines)
            if (l.line == name) return l;
        throw Error("missing table line " + name);
    };
    for (const LineSummary& l : lines)
        if (!l.uniform) {
            out.obstructions.push_back("line " + l.line + " has no single constant");
            out.realisable = false;
        }
    if (!out.realisable) return out;

    auto constant = [&](const std::string& name) {
        auto c = find(name).constant;
        return c ? *c : Rational(0);
    };
    Rational c_xi = constant("[X,I]");
    Rational c_pi = constant("[P,I]");
    Rational c_xp = constant("[X,P]");
    Rational c_xx = constant("[X,X]");
    Rational c_pp = constant("[P,P]");

    auto fail = [&](const std::string& msg) {
        out.obstructions.push_back(msg);
        out.realisable = false;
    };

    // Reference constants: [X,I] = +ell^2 P, [P,I] = -(1/R^2) X,
    // [X,P] = h eta I with h = ell/R, [X,X] = -ell^2 M, [P,P] = -(1/R^2) M,
    // rotation lines carry +1, [M,I] = 0.
    if (c_xi > 0)
        out.ell_squared = c_xi;
    else
        fail("[X,I] constant " + to_string(c_xi) + " forces ell^2 <= 0");
    if (c_pi < 0)
        out.R_squared = Rational(-1) / c_pi;
    else
        fail("[P,I] constant " + to_string(c_pi) + " forces R^2 <= 0");
    out.h = c_xp;
    if (c_xp <= 0) fail("[X,P] constant " + to_string(c_xp) + " forces h <= 0");
    if (out.ell_squared && out.R_squared && *out.h > 0 &&
        (*out.h) * (*out.h) != *out.ell_squared / *out.R_squared)
        fail("h = " + to_string(c_xp) + " does not satisfy h = ell/R");
    if (out.ell_squared && c_xx != -*out.ell_squared)
        fail("[X,X] constant " + to_string(c_xx) + " != -ell^2 = " + to_string(-*out.ell_squared));
    if (out.R_squared && c_pp != Rational(-1) / *out.R_squared)
        fail("[P,P] constant " + to_string(c_pp) + " != -1/R^2 = " + to_string(Rational(-1) / *out.R_squared));
    for (const char* rot : {"[M,X]", "[M,P]", "[M,M]"}) {
        Rational c = constant(rot);
        if (c != 1) fail(std::string(rot) + " constant " + to_string(c) + " != 1");
    }
    return out;
}

}  // namespace

Report verify_spha(const Generators& gens) {
    TableBuilder builder(gens);
    const auto& labeled = builder.generators();

    Report report{gens.sig, labeled.size(), 0, {}, {}, true, true, true,
                  ParameterisationCheck{false, std::nullopt, std::nullopt, std::nullopt, {}}};

    std::vector<Instance> instances = builder.instances();
    report.pair_count = instances.size();
    for (const Instance& inst : instances) {
        Fit fit = fit_pattern(inst.oriented, inst.pattern);
        // The generators span every non-scalar grade, so the span test
        // reduces to: no scalar part.
        bool closed = inst.result.coefficient(0) == 0;
        report.all_closed = report.all_closed && closed;
        report.entries.push_back(
            {inst.lhs, inst.rhs, inst.result, closed, inst.line, fit.constant, fit.match});
    }

    for (const std::string& line : line_order()) {
        LineSummary summary{line, 0, true, std::nullopt};
        for (std::size_t i = 0; i < instances.size(); ++i) {
            if (instances[i].line != line) continue;
            ++summary.instances;
            const BracketEntry& entry = report.entries[i];
            summary.uniform = summary.uniform && entry.pattern_match;
            if (entry.fitted_constant) {
                if (!summary.constant)
                    summary.constant = entry.fitted_constant;
                else if (*summary.constant != *entry.fitted_constant)
                    summary.uniform = false;
            }
        }
        report.lines.push_back(summary);
    }

    for (std::size_t i = 0; i < labeled.size(); ++i)
        for (std::size_t j = i + 1; j < labeled.size(); ++j)
            if (commutator(labeled[i].second, labeled[j].second) !=
                -commutator(labeled[j].second, labeled[i].second))
                report.antisymmetry_ok = false;

    for (std::size_t i = 0; i < labeled.size(); ++i)
        for (std::size_t j = i + 1; j < labeled.size(); ++j)
            for (std::size_t k = j + 1; k < labeled.size(); ++k) {
                const MultivectorQ& a = labeled[i].second;
                const MultivectorQ& b = labeled[j].second;
                const MultivectorQ& c = labeled[k].second;
                MultivectorQ jac = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                                   commutator(commutator(c, a), b);
                if (!jac.is_zero()) report.jacobi_ok = false;
            }

    report.parameterisation = check_parameterisation(report.lines);
    return report;
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "bracket table for Cl(" << r.sig.str() << "), " << r.generator_count << " generators, "
        << r.pair_count << " unordered pairs\n";
    out << "closure: " << (r.all_closed ? "yes" : "NO") << ", antisymmetry: "
        << (r.antisymmetry_ok ? "yes" : "NO") << ", Jacobi: " << (r.jacobi_ok ? "yes" : "NO") << "\n";
    out << "pattern lines:\n";
    for (const LineSummary& line : r.lines) {
        out << "  " << line.line << ": instances=" << line.instances << " uniform="
            << (line.uniform ? "yes" : "NO") << " constant="
            << (line.constant ? to_string(*line.constant) : "-") << "\n";
    }
    const ParameterisationCheck& pc = r.parameterisation;
    out << "single (ell, R, h) assignment: " << (pc.realisable ? "realisable" : "not realisable") << "\n";
    if (pc.ell_squared) out << "  ell^2 = " << to_string(*pc.ell_squared) << "\n";
    if (pc.R_squared) out << "  R^2 = " << to_string(*pc.R_squared) << "\n";
    if (pc.h) out << "  h = " << to_string(*pc.h) << "\n";
    for (const std::string& o : pc.obstructions) out << "  obstruction: " << o << "\n";
    out << "entries:\n";
    for (const BracketEntry& e : r.entries) {
        out << "  [" << e.lhs << ", " << e.rhs << "] = " << render(e.result) << "  (" << e.pattern_line
            << (e.pattern_match ? "" : ", PATTERN MISMATCH") << (e.closed ? "" : ", NOT CLOSED") << ")\n";
    }
    return out.str();
}

nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["signature"] = r.sig.str();
    j["generator_count"] = r.generator_count;
    j["pair_count"] = r.pair_count;
    j["all_closed"] = r.all_closed;
    j["antisymmetry_ok"] = r.antisymmetry_ok;
    j["jacobi_ok"] = r.jacobi_ok;
    j["lines"] = nlohmann::ordered_json::array();
    for (const LineSummary& line : r.lines) {
        nlohmann::ordered_json jl;
        jl["line"] = line.line;
        jl["instances"] = line.instances;
        jl["uniform"] = line.uniform;
        jl["constant"] = line.constant ? nlohmann::ordered_json(to_string(*line.constant))
                                       : nlohmann::ordered_json(nullptr);
        j["lines"].push_back(jl);
    }
    const ParameterisationCheck& pc = r.parameterisation;
    j["parameterisation"] = nlohmann::ordered_json::object();
    j["parameterisation"]["realisable"] = pc.realisable;
    j["parameterisation"]["ell_squared"] =
        pc.ell_squared ? nlohmann::ordered_json(to_string(*pc.ell_squared)) : nlohmann::ordered_json(nullptr);
    j["parameterisation"]["R_squared"] =
        pc.R_squared ? nlohmann::ordered_json(to_string(*pc.R_squared)) : nlohmann::ordered_json(nullptr);
    j["parameterisation"]["h"] =
        pc.h ? nlohmann::ordered_json(to_string(*pc.h)) : nlohmann::ordered_json(nullptr);
    j["parameterisation"]["obstructions"] = pc.obstructions;
    j["entries"] = nlohmann::ordered_json::array();
    for (const BracketEntry& e : r.entries) {
        nlohmann::ordered_json je;
        je["lhs"] = e.lhs;
        je["rhs"] = e.rhs;
        je["result"] = render(e.result);
        je["pattern_line"] = e.pattern_line;
        je["fitted_constant"] = e.fitted_constant ? nlohmann::ordered_json(to_string(*e.fitted_constant))
                                                  : nlohmann::ordered_json(nullptr);
        je["pattern_match"] = e.pattern_match;
        je["closure"] = e.closed;
        j["entries"].push_back(je);
    }
    return j;
}

}  // namespace gaphase::spha
