#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaphase/multivector.hpp"

namespace gaphase::phase {

enum class CommClass { Commuting, Anticommuting };

std::string to_string(CommClass c);

// P = X^{-1} I for a homogeneous X with nonzero squared norm.
MultivectorQ momentum_of(const MultivectorQ& x);

struct PairClassification {
    CommClass comm_class;
    MultivectorQ xp;  // witness X P
    MultivectorQ px;  // witness P X
};

// Classifies a conjugate pair by direct blade arithmetic: X P must reduce to
// a nonzero pseudoscalar multiple, and P X to +/- that. Anything else throws
// UnexpectedForm.
PairClassification classify_pair(const MultivectorQ& x, const MultivectorQ& p);

// How the self-dual middle grade of an even-dimensional algebra is split
// into a position half and a momentum half.
struct MiddleSplitRule {
    std::string name;
    std::function<bool(BladeMask)> x_side;

    // Default: blades containing e1 are positions; their duals (which cannot
    // contain e1) are the momenta.
    static MiddleSplitRule lowest_index();
};

struct SignedBladeTerm {
    BladeMask mask;
    Rational coeff;
};

struct PhasePair {
    int k;           // position grade
    int dual_grade;  // n - k
    CommClass comm_class;
    std::vector<BladeMask> x_basis;
    std::vector<SignedBladeTerm> p_basis;  // p_basis[i] = geometric_inverse of x_basis[i]
};

struct Decomposition {
    Signature sig;
    std::vector<PhasePair> pairs;
    std::string middle_rule;  // empty when n is odd (no split needed)
};

// Splits Cl(n), q = 0, into conjugate subspace pairs (grades k and n-k),
// with the middle grade of an even-dimensional algebra divided by `rule`.
Decomposition decompose(const Signature& sig, const MiddleSplitRule& rule = MiddleSplitRule::lowest_index());

struct AuditRow {
    int n;
    int k;
    CommClass computed_class;
    bool paper_parity_defined;              // is k(n-k)/2 an integer?
    std::optional<CommClass> paper_class;   // parity-rule prediction when defined
    std::optional<bool> agree;
};

// The source text's own worked examples, checked against the computed table.
struct ClaimRow {
    int n;
    int k;
    CommClass claimed_class;
    CommClass computed_class;
    bool agree;
};

struct AuditReport {
    int n_max;
    std::vector<AuditRow> rows;
    std::vector<ClaimRow> worked_examples;
};

// Compares the computed commutation class of every (k, n-k) pair for
// 2 <= n <= n_max against the published parity rule on k(n-k)/2, flagging
// rows where that rule is undefined (k(n-k) odd). Requires 2 <= n_max <= 8.
AuditReport audit_paper_claims(int n_max);

std::string to_text(const Decomposition& d);
nlohmann::ordered_json to_json(const Decomposition& d);
std::string to_text(const AuditReport& r);
nlohmann::ordered_json to_json(const AuditReport& r);

}  // namespace gaphase::phase
