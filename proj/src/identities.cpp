#include "gaphase/identities.hpp"

#include <algorithm>
#include <random>

#include "gaphase/format.hpp"

namespace gaphase {

HodgeCheck hodge_relation_check(const MultivectorQ& a, const MultivectorQ& b) {
    a.require_same_signature(b);
    if (!a.sig().is_euclidean())
        throw NonEuclideanSignature("the Hodge relation requires a Euclidean signature, got (" + a.sig().str() +
                                    ")");
    auto ga = a.homogeneous_grade();
    auto gb = b.homogeneous_grade();
    if (!ga || !gb || *ga != *gb)
        throw GradeMismatch("Hodge relation needs homogeneous operands of equal grade");
    MultivectorQ lhs = MultivectorQ::pseudoscalar(a.sig()) * inner(a, b);
    MultivectorQ rhs = wedge(a, hodge_dual(b));
    return {lhs, rhs, lhs == rhs};
}

namespace {

int dual_sign(int k, int n) { return (k * (n - k)) % 2 == 0 ? 1 : -1; }

void require_euclidean(const std::string& name, const Signature& sig) {
    if (!sig.is_euclidean())
        throw NonEuclideanSignature("suite '" + name + "' requires a Euclidean signature, got (" + sig.str() +
                                    ")");
}

SuiteResult run_clifford(const Signature& sig) {
    SuiteResult out{"clifford", true, 0, ""};
    for (int i = 1; i <= sig.n(); ++i)
        for (int j = 1; j <= sig.n(); ++j) {
            auto ei = MultivectorQ::basis_vector(sig, i);
            auto ej = MultivectorQ::basis_vector(sig, j);
            Rational gij = i == j ? Rational(sig.metric_sign(i - 1)) : Rational(0);
            MultivectorQ expected = MultivectorQ::scalar(sig, 2 * gij);
            ++out.checks;
            if (anticommutator(ei, ej) != expected) {
                out.passed = false;
                if (out.first_failure.empty())
                    out.first_failure = "e" + std::to_string(i) + ", e" + std::to_string(j);
            }
        }
    return out;
}

MultivectorQ random_multivector(const Signature& sig, std::mt19937_64& rng) {
    // Up to 32 terms keeps triple products affordable at every supported n.
    MultivectorQ out(sig);
    std::size_t blades = sig.blade_count();
    std::size_t terms = std::min<std::size_t>(blades, 32);
    for (std::size_t i = 0; i < terms; ++i) {
        BladeMask mask = static_cast<BladeMask>(rng() % blades);
        long coeff = static_cast<long>(rng() % 19) - 9;
        out.add_term(mask, Rational(coeff));
    }
    return out;
}

SuiteResult run_assoc(const Signature& sig, std::uint64_t seed) {
    SuiteResult out{"assoc", true, 0, ""};
    std::mt19937_64 rng(seed);
    constexpr int kTrials = 16;
    for (int trial = 0; trial < kTrials; ++trial) {
        MultivectorQ a = random_multivector(sig, rng);
        MultivectorQ b = random_multivector(sig, rng);
        MultivectorQ c = random_multivector(sig, rng);
        ++out.checks;
        if ((a * b) * c != a * (b * c)) {
            out.passed = false;
            if (out.first_failure.empty()) out.first_failure = "trial " + std::to_string(trial);
        }
    }
    return out;
}

SuiteResult run_hodge(const Signature& sig) {
    require_euclidean("hodge", sig);
    SuiteResult out{"hodge", true, 0, ""};
    std::size_t blades = sig.blade_count();
    for (BladeMask a = 0; a < blades; ++a)
        for (BladeMask b = 0; b < blades; ++b) {
            if (grade_of(a) != grade_of(b)) continue;
            auto A = MultivectorQ::basis_blade(sig, a);
            auto B = MultivectorQ::basis_blade(sig, b);
            HodgeCheck check = hodge_relation_check(A, B);
            int k = grade_of(a);
            MultivectorQ sym_lhs = wedge(A, hodge_dual(B));
            MultivectorQ sym_rhs = wedge(hodge_dual(B), A) * Rational(dual_sign(k, sig.n()));
            out.checks += 2;
            if (!check.equal || sym_lhs != sym_rhs) {
                out.passed = false;
                if (out.first_failure.empty())
                    out.first_failure = "A=" + blade_name(a) + " B=" + blade_name(b);
            }
        }
    return out;
}

SuiteResult run_dual(const Signature& sig) {
    require_euclidean("dual", sig);
    SuiteResult out{"dual", true, 0, ""};
    for (BladeMask m = 0; m < sig.blade_count(); ++m) {
        auto B = MultivectorQ::basis_blade(sig, m);
        MultivectorQ expected = B * Rational(dual_sign(grade_of(m), sig.n()));
        ++out.checks;
        if (hodge_dual(hodge_dual(B)) != expected) {
            out.passed = false;
            if (out.first_failure.empty()) out.first_failure = "B=" + blade_name(m);
        }
    }
    return out;
}

SuiteResult run_norm(const Signature& sig) {
    require_euclidean("norm", sig);
    SuiteResult out{"norm", true, 0, ""};
    for (BladeMask m = 0; m < sig.blade_count(); ++m) {
        auto B = MultivectorQ::basis_blade(sig, m);
        ++out.checks;
        if (inner(hodge_dual(B), hodge_dual(B)) != inner(B, B)) {
            out.passed = false;
            if (out.first_failure.empty()) out.first_failure = "B=" + blade_name(m);
        }
    }
    return out;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const Signature& sig, std::uint64_t seed) {
    if (name == "clifford") return run_clifford(sig);
    if (name == "assoc") return run_assoc(sig, seed);
    if (name == "hodge") return run_hodge(sig);
    if (name == "dual") return run_dual(sig);
    if (name == "norm") return run_norm(sig);
    throw Error("unknown suite '" + name + "'");
}

std::vector<std::string> default_suites(const Signature& sig) {
    if (sig.is_euclidean()) return all_suites();
    return {"clifford", "assoc"};
}

}  // namespace gaphase
