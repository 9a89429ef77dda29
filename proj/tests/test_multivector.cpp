#include "doctest.h"

#include "gaphase/multivector.hpp"

using namespace gaphase;

namespace {
const Signature cl2(2, 0);
const Signature cl3(3, 0);
const Signature cl4(4, 0);
}  // namespace

TEST_CASE("construction and arithmetic") {
    MultivectorQ a = MultivectorQ::scalar(cl3, 2);
    a += MultivectorQ::basis_vector(cl3, 1);
    CHECK(a.coefficient(0) == 2);
    CHECK(a.coefficient(0b1) == 1);
    CHECK(a.grades() == std::set<int>{0, 1});
    CHECK(!a.homogeneous_grade());

    MultivectorQ b = a - a;
    CHECK(b.is_zero());
    CHECK(b == MultivectorQ::zero(cl3));

    CHECK((a * Rational(0)).is_zero());
    CHECK(-a + a == MultivectorQ::zero(cl3));
    CHECK(MultivectorQ::basis_blade(cl3, 0b11).homogeneous_grade() == 2);
}

TEST_CASE("signature mismatch is rejected") {
    MultivectorQ a = MultivectorQ::basis_vector(cl2, 1);
    MultivectorQ b = MultivectorQ::basis_vector(cl3, 1);
    CHECK_THROWS_AS(a + b, SignatureMismatch);
    CHECK_THROWS_AS(a * b, SignatureMismatch);
    CHECK(a != b);
}

TEST_CASE("geometric products") {
    MultivectorQ e1 = MultivectorQ::basis_vector(cl4, 1);
    MultivectorQ I4 = MultivectorQ::pseudoscalar(cl4);
    CHECK(I4 * e1 == MultivectorQ::basis_blade(cl4, 0b1110, -1));
    CHECK(e1 * I4 == MultivectorQ::basis_blade(cl4, 0b1110, 1));

    MultivectorQ I2 = MultivectorQ::pseudoscalar(cl2);
    CHECK(I2 * I2 == MultivectorQ::scalar(cl2, -1));
    MultivectorQ I3 = MultivectorQ::pseudoscalar(cl3);
    CHECK(I3 * I3 == MultivectorQ::scalar(cl3, -1));
    CHECK(I4 * I4 == MultivectorQ::scalar(cl4, 1));

    // mixed-grade product distributes
    MultivectorQ a = MultivectorQ::scalar(cl2, 1) + MultivectorQ::basis_vector(cl2, 1);
    MultivectorQ e2 = MultivectorQ::basis_vector(cl2, 2);
    MultivectorQ expected = e2 + MultivectorQ::basis_blade(cl2, 0b11);
    CHECK(a * e2 == expected);
}

TEST_CASE("grade projection") {
    MultivectorQ a = MultivectorQ::scalar(cl3, 5) + MultivectorQ::basis_blade(cl3, 0b11, 2);
    CHECK(grade_project(a, 0) == MultivectorQ::scalar(cl3, 5));
    CHECK(grade_project(a, 2) == MultivectorQ::basis_blade(cl3, 0b11, 2));
    CHECK(grade_project(a, 1).is_zero());
    CHECK_THROWS_AS(grade_project(a, 4), GradeOutOfRange);
    CHECK_THROWS_AS(grade_project(a, -1), GradeOutOfRange);
}

TEST_CASE("dot keeps the |r-s| part, scalars included") {
    MultivectorQ e12 = MultivectorQ::basis_blade(cl3, 0b011);
    MultivectorQ e2 = MultivectorQ::basis_vector(cl3, 2);
    CHECK(dot(e12, e2) == MultivectorQ::basis_vector(cl3, 1));
    CHECK(dot(e2, e12) == MultivectorQ::basis_vector(cl3, 1) * Rational(-1));
    CHECK(dot(MultivectorQ::scalar(cl3, 2), e12) == e12 * Rational(2));
    CHECK(dot(e12, e12) == MultivectorQ::scalar(cl3, -1));
    // e12 . e3 has grade 3 = 2 + 1, not |2 - 1|: dropped
    CHECK(dot(e12, MultivectorQ::basis_vector(cl3, 3)).is_zero());
}

TEST_CASE("wedge keeps the r+s part") {
    MultivectorQ e1 = MultivectorQ::basis_vector(cl3, 1);
    MultivectorQ e2 = MultivectorQ::basis_vector(cl3, 2);
    CHECK(wedge(e1, e2) == MultivectorQ::basis_blade(cl3, 0b11));
    CHECK(wedge(e2, e1) == MultivectorQ::basis_blade(cl3, 0b11, -1));
    CHECK(wedge(e1, e1).is_zero());
    MultivectorQ a = MultivectorQ::scalar(cl3, 1) + e1;
    CHECK(wedge(a, e2) == e2 + MultivectorQ::basis_blade(cl3, 0b11));
}

TEST_CASE("reversion") {
    MultivectorQ e123 = MultivectorQ::pseudoscalar(cl3);
    CHECK(reversion(e123) == e123 * Rational(-1));
    MultivectorQ a = MultivectorQ::scalar(cl3, 7) + MultivectorQ::basis_vector(cl3, 2) +
                     MultivectorQ::basis_blade(cl3, 0b110, 3);
    MultivectorQ expected = MultivectorQ::scalar(cl3, 7) + MultivectorQ::basis_vector(cl3, 2) +
                            MultivectorQ::basis_blade(cl3, 0b110, -3);
    CHECK(reversion(a) == expected);
    CHECK(reversion(reversion(a)) == a);
}

TEST_CASE("inner pairing") {
    MultivectorQ e12 = MultivectorQ::basis_blade(cl3, 0b011);
    CHECK(inner(e12, e12) == 1);
    CHECK(inner(MultivectorQ::basis_vector(cl3, 1), MultivectorQ::basis_vector(cl3, 2)) == 0);
    CHECK(inner(e12 * Rational(3), e12 * Rational(5)) == 15);
    Signature cl31(3, 1);
    MultivectorQ e4 = MultivectorQ::basis_vector(cl31, 4);
    CHECK(inner(e4, e4) == -1);
}

TEST_CASE("hodge dual") {
    CHECK(hodge_dual(MultivectorQ::basis_vector(cl3, 1)) == MultivectorQ::basis_blade(cl3, 0b110));
    CHECK(hodge_dual(MultivectorQ::scalar(cl3, 1)) == MultivectorQ::pseudoscalar(cl3));
    CHECK(hodge_dual(MultivectorQ::pseudoscalar(cl3)) == MultivectorQ::scalar(cl3, 1));
}

TEST_CASE("inverse") {
    MultivectorQ two_e12 = MultivectorQ::basis_blade(cl3, 0b011, 2);
    CHECK(inverse(two_e12) == MultivectorQ::basis_blade(cl3, 0b011, Rational(-1, 2)));
    CHECK(inverse(two_e12) * two_e12 == MultivectorQ::scalar(cl3, 1));
    MultivectorQ e1 = MultivectorQ::basis_vector(cl3, 1);
    CHECK(inverse(e1) == e1);

    Signature cl11(1, 1);
    MultivectorQ null_vec = MultivectorQ::basis_vector(cl11, 1) + MultivectorQ::basis_vector(cl11, 2);
    CHECK(inner(null_vec, null_vec) == 0);
    CHECK_THROWS_AS(inverse(null_vec), NullBlade);
}

TEST_CASE("geometric inverse") {
    CHECK(geometric_inverse(MultivectorQ::basis_vector(cl3, 1)) == MultivectorQ::basis_blade(cl3, 0b110));
    CHECK(geometric_inverse(MultivectorQ::basis_blade(cl3, 0b011)) == MultivectorQ::basis_vector(cl3, 3));
}

TEST_CASE("commutators") {
    MultivectorQ e1 = MultivectorQ::basis_vector(cl2, 1);
    MultivectorQ e2 = MultivectorQ::basis_vector(cl2, 2);
    CHECK(anticommutator(e1, e2).is_zero());
    CHECK(commutator(e1, e2) == MultivectorQ::basis_blade(cl2, 0b11, 2));
    CHECK(anticommutator(e1, e1) == MultivectorQ::scalar(cl2, 2));
}

TEST_CASE("double coefficients work too") {
    MultivectorD e1 = MultivectorD::basis_vector(cl2, 1);
    MultivectorD e2 = MultivectorD::basis_vector(cl2, 2);
    MultivectorD prod = (e1 * 2.0) * e2;
    CHECK(prod.coefficient(0b11) == 2.0);
    CHECK(inner(e1, e1) == 1.0);
}
