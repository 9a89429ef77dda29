#pragma once

#include <stdexcept>
#include <string>

namespace gaphase {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in different algebras Cl(p,q).
class SignatureMismatch : public Error {
public:
    using Error::Error;
};

// Requested grade outside 0..n.
class GradeOutOfRange : public Error {
public:
    using Error::Error;
};

// Inverse of an element whose squared norm vanishes.
class NullBlade : public Error {
public:
    using Error::Error;
};

// An operation that needs homogeneous operands got mixed grades.
class GradeMismatch : public Error {
public:
    using Error::Error;
};

// Identity suites that only hold for q = 0 were asked to run with q > 0.
class NonEuclideanSignature : public Error {
public:
    using Error::Error;
};

// A component only defined for specific (p,q) was given something else.
class UnsupportedSignature : public Error {
public:
    using Error::Error;
};

// A product that should have reduced to a signed pseudoscalar (or other
// expected shape) did not.
class UnexpectedForm : public Error {
public:
    using Error::Error;
};

// A coordinate pair whose commutation class is needed but not established.
class UnclassifiedPair : public Error {
public:
    using Error::Error;
};

// Two quantities bound to different coordinate pairs were combined.
class PairMismatch : public Error {
public:
    using Error::Error;
};

// Dimension beyond what the dense blade machinery supports.
class DimensionTooLarge : public Error {
public:
    using Error::Error;
};

// Bad multivector / Hamiltonian / CLI input text.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace gaphase
