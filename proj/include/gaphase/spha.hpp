#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaphase/multivector.hpp"

namespace gaphase::spha {

// The fifteen generators of the stabilised algebra realised inside Cl(4) or
// Cl(3,1): four positions X_a = gamma_a (vectors), four momenta
// P_a = *gamma_a (trivectors), six rotations M_ab = gamma_a gamma_b (a < b),
// and the pseudoscalar I. For Cl(3,1) the timelike gamma_0 is e4, so the
// a-indexed metric reads (-1, +1, +1, +1); for Cl(4) it is all +1.
struct Generators {
    Signature sig;
    std::vector<MultivectorQ> X;                  // index a = 0..3
    std::vector<MultivectorQ> P;                  // index a = 0..3
    std::vector<std::pair<int, int>> m_index;     // the six (a,b), a < b
    std::vector<MultivectorQ> M;                  // parallel to m_index
    MultivectorQ I;
    std::array<int, 4> eta;                       // eta_aa in a-order
    Rational ell;
    Rational R;
    bool rescaled;

    const MultivectorQ& m(int a, int b) const;    // requires a < b
};

// rescaled = true builds X_a = ell gamma_a and P_a = (1/R) *gamma_a to probe
// how the bracket constants transform under the (ell, R) scaling.
Generators build_generators(const Signature& sig, const Rational& ell = 1, const Rational& R = 1,
                            bool rescaled = false);

struct BracketEntry {
    std::string lhs;
    std::string rhs;
    MultivectorQ result;                     // [lhs, rhs]
    bool closed;                             // lies in the generator span
    std::string pattern_line;                // which table line this pair instantiates
    std::optional<Rational> fitted_constant; // result = c * pattern (null when pattern is 0)
    bool pattern_match;                      // result is exactly proportional to the pattern
};

struct LineSummary {
    std::string line;
    std::size_t instances;
    bool uniform;                        // every instance fits, with one shared constant
    std::optional<Rational> constant;
};

// Does a single positive (ell, R) with h = ell/R reproduce the reference
// table constants (+1 rotation lines, h on [X,P], -ell^2 on [X,X],
// -1/R^2 on [P,P] and [P,I], +ell^2 on [X,I], 0 on [M,I])?
struct ParameterisationCheck {
    bool realisable;
    std::optional<Rational> ell_squared;  // forced value, when positive
    std::optional<Rational> R_squared;
    std::optional<Rational> h;
    std::vector<std::string> obstructions;
};

struct Report {
    Signature sig;
    std::size_t generator_count;
    std::size_t pair_count;
    std::vector<BracketEntry> entries;    // all unordered generator pairs
    std::vector<LineSummary> lines;
    bool all_closed;
    bool antisymmetry_ok;
    bool jacobi_ok;                       // all generator triples
    ParameterisationCheck parameterisation;
};

Report verify_spha(const Generators& gens);

std::string to_text(const Report& r);
nlohmann::ordered_json to_json(const Report& r);

}  // namespace gaphase::spha
