#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaphase/multivector.hpp"

namespace gaphase {

struct HodgeCheck {
    MultivectorQ lhs;  // g(A,B) I
    MultivectorQ rhs;  // A ^ *B
    bool equal;
};

// The defining relation g(A,B) I = A ^ *B for equal-grade homogeneous A, B
// over a Euclidean algebra. Throws NonEuclideanSignature / GradeMismatch when
// the preconditions fail.
HodgeCheck hodge_relation_check(const MultivectorQ& a, const MultivectorQ& b);

struct SuiteResult {
    std::string name;
    bool passed;
    std::size_t checks;       // number of individual identities evaluated
    std::string first_failure;  // empty when passed
};

// Named identity suites:
//   clifford  e_i e_j + e_j e_i = 2 g_ij           (any signature)
//   assoc     (AB)C = A(BC), random multivectors   (any signature, seeded)
//   hodge     Hodge relation + wedge symmetry      (q = 0 only)
//   dual      **B = (-1)^{k(n-k)} B                (q = 0 only)
//   norm      g(*B,*B) = g(B,B)                    (q = 0 only)
// All arithmetic is exact.
SuiteResult run_suite(const std::string& name, const Signature& sig, std::uint64_t seed = 0);

// Suites applicable to the given signature, in canonical order.
std::vector<std::string> default_suites(const Signature& sig);

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names{"clifford", "assoc", "hodge", "dual", "norm"};
    return names;
}

}  // namespace gaphase
