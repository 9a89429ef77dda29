#pragma once

#include <string>

#include "gaphase/multivector.hpp"

namespace gaphase {

// Human-readable term list, e.g. "1 + 2*e12 - e134", terms ordered by blade
// mask. The zero multivector renders as "0".
std::string render(const MultivectorQ& mv);
std::string render(const MultivectorD& mv);

std::string render_signed_blade(int sign, BladeMask mask);

// Inverse of render, plus some slack: indices in any order (sign is
// canonicalised), repeated indices contracted through the metric, "I" for the
// pseudoscalar, plain rationals ("3/2") and decimals ("0.25") as
// coefficients. Throws ParseError on malformed input.
MultivectorQ parse_multivector(const std::string& text, const Signature& sig);

// Standalone signed rational: "-3", "5/2", "0.125". Decimals convert exactly.
Rational parse_rational(const std::string& text);

}  // namespace gaphase
