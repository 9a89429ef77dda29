#include "doctest.h"

#include "gaphase/format.hpp"

using namespace gaphase;

namespace {
const Signature cl3(3, 0);
const Signature cl4(4, 0);
}  // namespace

TEST_CASE("render term lists") {
    CHECK(render(MultivectorQ::zero(cl3)) == "0");
    CHECK(render(MultivectorQ::scalar(cl3, 1)) == "1");
    CHECK(render(MultivectorQ::scalar(cl3, Rational(-3, 2))) == "-3/2");
    CHECK(render(MultivectorQ::basis_vector(cl3, 2) * Rational(-1)) == "-e2");

    MultivectorQ mv = MultivectorQ::scalar(cl4, 1) + MultivectorQ::basis_blade(cl4, 0b0011, 2) +
                      MultivectorQ::basis_blade(cl4, 0b1101, -1);
    CHECK(render(mv) == "1 + 2*e12 - e134");
}

TEST_CASE("render doubles") {
    MultivectorD mv = MultivectorD::basis_vector(cl3, 1) * 0.5;
    CHECK(render(mv) == "0.5*e1");
}

TEST_CASE("parse canonical and scrambled input") {
    MultivectorQ expected = MultivectorQ::scalar(cl4, 1) + MultivectorQ::basis_blade(cl4, 0b0011, 2) +
                            MultivectorQ::basis_blade(cl4, 0b1101, -1);
    CHECK(parse_multivector("1 + 2*e12 - e134", cl4) == expected);
    CHECK(parse_multivector("1+2*e12-e134", cl4) == expected);

    // index order is canonicalised through the product sign
    CHECK(parse_multivector("e21", cl3) == MultivectorQ::basis_blade(cl3, 0b011, -1));
    CHECK(parse_multivector("e{2,1}", cl3) == MultivectorQ::basis_blade(cl3, 0b011, -1));
    // repeated indices contract through the metric
    CHECK(parse_multivector("e11", cl3) == MultivectorQ::scalar(cl3, 1));
    CHECK(parse_multivector("I", cl3) == MultivectorQ::pseudoscalar(cl3));
    CHECK(parse_multivector("-I", cl3) == MultivectorQ::pseudoscalar(cl3) * Rational(-1));
    CHECK(parse_multivector("0.5*e1", cl3) == MultivectorQ::basis_vector(cl3, 1) * Rational(1, 2));
    CHECK(parse_multivector("0.08*e1", cl3) == MultivectorQ::basis_vector(cl3, 1) * Rational(2, 25));
    CHECK(parse_multivector("3/2", cl3) == MultivectorQ::scalar(cl3, Rational(3, 2)));
    CHECK(parse_multivector("e1 - e1", cl3).is_zero());
    CHECK(parse_multivector(" - e2 ", cl3) == MultivectorQ::basis_vector(cl3, 2) * Rational(-1));
    CHECK(parse_multivector("2 e12", cl3) == MultivectorQ::basis_blade(cl3, 0b011, 2));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_multivector("", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("   ", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("e0", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("e4", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("1 +", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("e{1,", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("e{5}", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("x", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("1/0", cl3), ParseError);
    CHECK_THROWS_AS(parse_multivector("e1 e2", cl3), ParseError);
}

TEST_CASE("wide indices render braced and parse back") {
    Signature cl10(10, 0);
    MultivectorQ mv = MultivectorQ::basis_blade(cl10, (BladeMask{1} << 9) | 1);
    CHECK(render(mv) == "e{1,10}");
    CHECK(parse_multivector("e{1,10}", cl10) == mv);
    CHECK(parse_multivector("e{10,1}", cl10) == mv * Rational(-1));
}

TEST_CASE("round trip over a dense multivector") {
    MultivectorQ mv(cl3);
    for (BladeMask m = 0; m < cl3.blade_count(); ++m)
        mv.add_term(m, Rational(static_cast<int>(m) - 3, 2));
    CHECK(parse_multivector(render(mv), cl3) == mv);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("0.08") == Rational(2, 25));  // digits must not be read as octal
    CHECK(parse_rational("007/2") == Rational(7, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("2x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5.2"), ParseError);
}

TEST_CASE("signed blade strings") {
    CHECK(render_signed_blade(1, 0) == "1");
    CHECK(render_signed_blade(-1, 0) == "-1");
    CHECK(render_signed_blade(-1, 0b110) == "-e23");
}
