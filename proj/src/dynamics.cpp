#include "gaphase/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "gaphase/format.hpp"

namespace gaphase::dyn {

PairBinding PairBinding::make(const Signature& sig, BladeMask x_mask) {
    MultivectorQ x = MultivectorQ::basis_blade(sig, x_mask);
    MultivectorQ p = phase::momentum_of(x);
    const auto& [p_mask, p_coeff] = *p.terms().begin();
    phase::CommClass c = phase::classify_pair(x, p).comm_class;
    return {sig, grade_of(x_mask), x_mask, p_mask, p_coeff, c};
}

PairBinding PairBinding::make_grade(const Signature& sig, int k) {
    if (k < 0 || k > sig.n()) throw GradeOutOfRange("pair grade outside 0.." + std::to_string(sig.n()));
    return make(sig, (BladeMask{1} << k) - 1);
}

MultivectorD PairBinding::x_blade() const { return MultivectorD::basis_blade(sig, x_mask); }

MultivectorD PairBinding::p_blade() const {
    return MultivectorD::basis_blade(sig, p_mask, to_double(p_coeff));
}

namespace {

std::vector<Term> canonicalise(std::vector<Term> terms) {
    std::map<std::pair<int, int>, Rational> acc;
    for (const Term& t : terms) {
        if (t.x_pow < 0 || t.p_pow < 0) throw Error("negative power in Hamiltonian term");
        acc[{t.x_pow, t.p_pow}] += t.coeff;
    }
    std::vector<Term> out;
    for (const auto& [powers, coeff] : acc)
        if (coeff != 0) out.push_back({coeff, powers.first, powers.second});
    return out;
}

double ipow(double base, int exp) {
    double out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

Rational ipow(const Rational& base, int exp) {
    Rational out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

int bracket_sign(const PairBinding& pair) {
    if (!pair.comm_class) throw UnclassifiedPair("pair has no established commutation class");
    return *pair.comm_class == phase::CommClass::Commuting ? -1 : 1;
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(PairBinding pair, std::vector<Term> terms)
    : pair_(std::move(pair)), terms_(canonicalise(std::move(terms))) {}

HamiltonianSpec HamiltonianSpec::parse(std::istream& in, const PairBinding& pair) {
    std::vector<Term> terms;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string coeff_text;
        if (!(fields >> coeff_text)) continue;  // blank line
        long x_pow = -1, p_pow = -1;
        if (!(fields >> x_pow >> p_pow) || x_pow < 0 || p_pow < 0)
            throw ParseError("line " + std::to_string(line_no) + ": expected '<coeff> <x_pow> <p_pow>'");
        std::string extra;
        if (fields >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": trailing text '" + extra + "'");
        terms.push_back({parse_rational(coeff_text), static_cast<int>(x_pow), static_cast<int>(p_pow)});
    }
    return HamiltonianSpec(pair, std::move(terms));
}

HamiltonianSpec HamiltonianSpec::load(const std::string& path, const PairBinding& pair) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open Hamiltonian file '" + path + "'");
    return parse(in, pair);
}

HamiltonianSpec HamiltonianSpec::d_dx() const {
    std::vector<Term> out;
    for (const Term& t : terms_)
        if (t.x_pow > 0) out.push_back({t.coeff * t.x_pow, t.x_pow - 1, t.p_pow});
    return HamiltonianSpec(pair_, std::move(out));
}

HamiltonianSpec HamiltonianSpec::d_dp() const {
    std::vector<Term> out;
    for (const Term& t : terms_)
        if (t.p_pow > 0) out.push_back({t.coeff * t.p_pow, t.x_pow, t.p_pow - 1});
    return HamiltonianSpec(pair_, std::move(out));
}

double HamiltonianSpec::eval(double x, double p) const {
    double out = 0.0;
    for (const Term& t : terms_) out += to_double(t.coeff) * ipow(x, t.x_pow) * ipow(p, t.p_pow);
    return out;
}

Rational HamiltonianSpec::eval_exact(const Rational& x, const Rational& p) const {
    Rational out = 0;
    for (const Term& t : terms_) out += t.coeff * ipow(x, t.x_pow) * ipow(p, t.p_pow);
    return out;
}

namespace {

void require_same_pair(const HamiltonianSpec& a, const HamiltonianSpec& b) {
    if (!(a.pair() == b.pair())) throw PairMismatch("operands are bound to different conjugate pairs");
}

}  // namespace

HamiltonianSpec operator+(const HamiltonianSpec& a, const HamiltonianSpec& b) {
    require_same_pair(a, b);
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return HamiltonianSpec(a.pair(), std::move(terms));
}

HamiltonianSpec operator*(const HamiltonianSpec& a, const HamiltonianSpec& b) {
    require_same_pair(a, b);
    std::vector<Term> terms;
    for (const Term& s : a.terms())
        for (const Term& t : b.terms())
            terms.push_back({s.coeff * t.coeff, s.x_pow + t.x_pow, s.p_pow + t.p_pow});
    return HamiltonianSpec(a.pair(), std::move(terms));
}

HamiltonianSpec operator*(const HamiltonianSpec& a, const Rational& s) {
    std::vector<Term> terms = a.terms();
    for (Term& t : terms) t.coeff *= s;
    return HamiltonianSpec(a.pair(), std::move(terms));
}

MultivectorD mv_derivative_x(const HamiltonianSpec& f, const PhaseState& state) {
    const PairBinding& pair = f.pair();
    double fx = f.d_dx().eval(state.x, state.p);
    int sign = reversion_sign(grade_of(pair.x_mask));
    return MultivectorD::basis_blade(pair.sig, pair.x_mask, sign * fx);
}

MultivectorD mv_derivative_p(const HamiltonianSpec& f, const PhaseState& state) {
    const PairBinding& pair = f.pair();
    double fp = f.d_dp().eval(state.x, state.p);
    int sign = reversion_sign(grade_of(pair.p_mask));
    return MultivectorD::basis_blade(pair.sig, pair.p_mask, sign * to_double(pair.p_coeff) * fp);
}

std::pair<double, double> hamilton_rhs(const HamiltonianSpec& h, const PhaseState& state) {
    int sign = bracket_sign(h.pair());  // -1 commuting, +1 anticommuting
    double hx = h.d_dx().eval(state.x, state.p);
    double hp = h.d_dp().eval(state.x, state.p);
    double xdot = sign < 0 ? hp : -hp;
    return {xdot, -hx};
}

HamiltonianSpec poisson_bracket_poly(const HamiltonianSpec& f, const HamiltonianSpec& g) {
    require_same_pair(f, g);
    int s = bracket_sign(f.pair());
    return f.d_dx() * g.d_dp() + (f.d_dp() * g.d_dx()) * Rational(s);
}

MultivectorD poisson_bracket(const HamiltonianSpec& f, const HamiltonianSpec& g, const PhaseState& state) {
    double value = poisson_bracket_poly(f, g).eval(state.x, state.p);
    return MultivectorD::basis_blade(f.pair().sig, f.pair().sig.pseudoscalar_mask(), value);
}

MultivectorD bracket_with_h(const HamiltonianSpec& f, const HamiltonianSpec& h, const PhaseState& state) {
    return poisson_bracket(f, h, state);
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "leapfrog") return Scheme::Leapfrog;
    if (name == "euler") return Scheme::SymplecticEuler;
    if (name == "rk4") return Scheme::RK4;
    throw Error("unknown scheme '" + name + "' (expected leapfrog, euler or rk4)");
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::Leapfrog: return "leapfrog";
        case Scheme::SymplecticEuler: return "euler";
        default: return "rk4";
    }
}

Trajectory integrate(const HamiltonianSpec& h, const PhaseState& initial, double dt, long steps,
                     Scheme scheme, long stride) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw Error("dt must be positive and finite");
    if (steps < 1) throw Error("steps must be >= 1");
    if (stride < 1) throw Error("stride must be >= 1");

    HamiltonianSpec hx = h.d_dx();
    HamiltonianSpec hp = h.d_dp();
    int sign = bracket_sign(h.pair());
    auto xdot = [&](double x, double p) {
        double v = hp.eval(x, p);
        return sign < 0 ? v : -v;
    };
    auto pdot = [&](double x, double p) { return -hx.eval(x, p); };

    Trajectory out{h.pair(), scheme, dt, steps, stride, true, {}};
    double x = initial.x;
    double p = initial.p;
    out.samples.push_back({0.0, x, p, h.eval(x, p)});

    for (long i = 1; i <= steps; ++i) {
        switch (scheme) {
            case Scheme::Leapfrog: {
                p += 0.5 * dt * pdot(x, p);
                x += dt * xdot(x, p);
                p += 0.5 * dt * pdot(x, p);
                break;
            }
            case Scheme::SymplecticEuler: {
                p += dt * pdot(x, p);
                x += dt * xdot(x, p);
                break;
            }
            case Scheme::RK4: {
                double k1x = xdot(x, p), k1p = pdot(x, p);
                double k2x = xdot(x + 0.5 * dt * k1x, p + 0.5 * dt * k1p);
                double k2p = pdot(x + 0.5 * dt * k1x, p + 0.5 * dt * k1p);
                double k3x = xdot(x + 0.5 * dt * k2x, p + 0.5 * dt * k2p);
                double k3p = pdot(x + 0.5 * dt * k2x, p + 0.5 * dt * k2p);
                double k4x = xdot(x + dt * k3x, p + dt * k3p);
                double k4p = pdot(x + dt * k3x, p + dt * k3p);
                x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
                p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
                break;
            }
        }
        double t = static_cast<double>(i) * dt;
        if (!std::isfinite(x) || !std::isfinite(p)) {
            out.completed = false;
            throw NonFiniteState("state became non-finite at step " + std::to_string(i), std::move(out));
        }
        if (i % stride == 0 || i == steps) out.samples.push_back({t, x, p, h.eval(x, p)});
    }
    return out;
}

void write_csv(std::ostream& out, const Trajectory& trajectory) {
    out << "t,x,p,H\n";
    char buf[160];
    for (const Sample& s : trajectory.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.t, s.x, s.p, s.H);
        out << buf;
    }
}

}  // namespace gaphase::dyn
