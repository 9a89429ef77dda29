#pragma once

#include <algorithm>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaphase/multivector.hpp"
#include "gaphase/phase_space.hpp"

namespace gaphase::dyn {

// A single conjugate pair (X, P) = (x e_K, p *e_K): the arena scalar
// dynamics runs in. The commutation class fixes the signs in Hamilton's
// equations and the bracket.
struct PairBinding {
    Signature sig;
    int k;
    BladeMask x_mask;
    BladeMask p_mask;
    Rational p_coeff;  // momentum basis element = p_coeff * e_{p_mask}
    std::optional<phase::CommClass> comm_class;

    // Builds the binding for position blade e_K and classifies it.
    static PairBinding make(const Signature& sig, BladeMask x_mask);
    // Lowest-index grade-k blade, e.g. k=1 -> e1.
    static PairBinding make_grade(const Signature& sig, int k);

    MultivectorD x_blade() const;
    MultivectorD p_blade() const;

    friend bool operator==(const PairBinding& a, const PairBinding& b) {
        return a.sig == b.sig && a.x_mask == b.x_mask;
    }
};

struct PhaseState {
    double x;
    double p;
    double t = 0.0;
};

struct Term {
    Rational coeff;
    int x_pow;
    int p_pow;
};

// Polynomial H(x, p) = sum c x^a p^b over one pair. Exact coefficients so
// the symbolic identities (derivatives, products, brackets) can be checked
// without tolerance.
class HamiltonianSpec {
public:
    HamiltonianSpec(PairBinding pair, std::vector<Term> terms);

    // One term per line: "<coeff> <x_pow> <p_pow>"; '#' starts a comment.
    static HamiltonianSpec parse(std::istream& in, const PairBinding& pair);
    static HamiltonianSpec load(const std::string& path, const PairBinding& pair);

    const PairBinding& pair() const { return pair_; }
    const std::vector<Term>& terms() const { return terms_; }  // canonical order
    bool is_zero() const { return terms_.empty(); }

    HamiltonianSpec d_dx() const;
    HamiltonianSpec d_dp() const;

    double eval(double x, double p) const;
    Rational eval_exact(const Rational& x, const Rational& p) const;

    friend HamiltonianSpec operator+(const HamiltonianSpec& a, const HamiltonianSpec& b);
    friend HamiltonianSpec operator*(const HamiltonianSpec& a, const HamiltonianSpec& b);
    friend HamiltonianSpec operator*(const HamiltonianSpec& a, const Rational& s);
    friend bool operator==(const HamiltonianSpec& a, const HamiltonianSpec& b) {
        return a.pair_ == b.pair_ && a.terms_.size() == b.terms_.size() &&
               std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                          [](const Term& s, const Term& t) {
                              return s.coeff == t.coeff && s.x_pow == t.x_pow && s.p_pow == t.p_pow;
                          });
    }

private:
    PairBinding pair_;
    std::vector<Term> terms_;
};

// Multivector-valued derivatives e_K^dag dF/dx and (*e_K)^dag dF/dp at a
// phase point.
MultivectorD mv_derivative_x(const HamiltonianSpec& f, const PhaseState& state);
MultivectorD mv_derivative_p(const HamiltonianSpec& f, const PhaseState& state);

// (dx/dt, dp/dt). Commuting pairs evolve canonically (x' = +H_p, p' = -H_x);
// anticommuting pairs flip the position equation (x' = -H_p, p' = -H_x).
std::pair<double, double> hamilton_rhs(const HamiltonianSpec& h, const PhaseState& state);

// Coefficient polynomial of {F, G} = (F_x G_p + s F_p G_x) I, where s = -1
// for a commuting pair and s = +1 for an anticommuting pair.
HamiltonianSpec poisson_bracket_poly(const HamiltonianSpec& f, const HamiltonianSpec& g);

// {F, G} evaluated at a phase point: a pseudoscalar multiple.
MultivectorD poisson_bracket(const HamiltonianSpec& f, const HamiltonianSpec& g, const PhaseState& state);
MultivectorD bracket_with_h(const HamiltonianSpec& f, const HamiltonianSpec& h, const PhaseState& state);

enum class Scheme { Leapfrog, SymplecticEuler, RK4 };

Scheme scheme_from_string(const std::string& name);
std::string to_string(Scheme s);

struct Sample {
    double t;
    double x;
    double p;
    double H;
};

struct Trajectory {
    PairBinding pair;
    Scheme scheme;
    double dt;
    long steps;
    long stride;
    bool completed;
    std::vector<Sample> samples;
};

// Thrown when the state stops being finite; carries what was integrated so
// far (completed = false).
class NonFiniteState : public Error {
public:
    NonFiniteState(const std::string& msg, Trajectory partial)
        : Error(msg), partial_(std::move(partial)) {}
    const Trajectory& partial() const { return partial_; }

private:
    Trajectory partial_;
};

// Leapfrog is kick-drift-kick; both it and the symplectic Euler step assume
// the usual separable-Hamiltonian setting for their conservation behaviour,
// RK4 is the non-symplectic control.
Trajectory integrate(const HamiltonianSpec& h, const PhaseState& initial, double dt, long steps,
                     Scheme scheme, long stride = 1);

// Header exactly "t,x,p,H".
void write_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace gaphase::dyn
