#pragma once

#include <bit>
#include <string>
#include <vector>

#include "gaphase/signature.hpp"

namespace gaphase {

inline int grade_of(BladeMask m) { return std::popcount(m); }

// Sign from moving every factor of `a` past the factors of `b` into a single
// ascending-index product: (-1)^#{(i,j) : i in a, j in b, i > j}.
int reorder_sign(BladeMask a, BladeMask b);

struct SignedBlade {
    BladeMask mask;
    int sign;  // +1 or -1
};

// Geometric product of two basis blades. Shared factors contract through the
// metric; the result is always a single signed blade with mask a ^ b.
SignedBlade blade_product(BladeMask a, BladeMask b, const Signature& sig);

// Sign picked up by reversing a homogeneous grade-k element: (-1)^{k(k-1)/2}.
inline int reversion_sign(int grade) { return (grade % 4 == 2 || grade % 4 == 3) ? -1 : 1; }

// Indices (1-based, ascending) of the vectors in a blade.
std::vector<int> blade_indices(BladeMask mask);

// "1" for the scalar, "e12" style otherwise; "e{1,10,12}" once an index
// needs more than one digit.
std::string blade_name(BladeMask mask);

}  // namespace gaphase
