#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "gaphase/blade.hpp"
#include "gaphase/rational.hpp"
#include "gaphase/signature.hpp"

namespace gaphase {

// Sparse multivector over Cl(p,q) with coefficients of type Coeff (exact
// Rational for verification work, double for numerics). Zero coefficients are
// never stored, so term maps compare canonically.
template <typename Coeff>
class Multivector {
public:
    using TermMap = std::map<BladeMask, Coeff>;

    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector zero(Signature sig) { return Multivector(sig); }

    static Multivector scalar(Signature sig, Coeff value) {
        Multivector out(sig);
        out.add_term(0, std::move(value));
        return out;
    }

    // index is 1-based, matching the e1, e2, ... naming.
    static Multivector basis_vector(Signature sig, int index) {
        if (index < 1 || index > sig.n()) throw GradeOutOfRange("basis vector index out of range");
        return basis_blade(sig, BladeMask{1} << (index - 1));
    }

    static Multivector basis_blade(Signature sig, BladeMask mask, Coeff coeff = Coeff(1)) {
        if (mask >= sig.blade_count()) throw GradeOutOfRange("blade mask outside the algebra");
        Multivector out(sig);
        out.add_term(mask, std::move(coeff));
        return out;
    }

    static Multivector pseudoscalar(Signature sig) { return basis_blade(sig, sig.pseudoscalar_mask()); }

    const Signature& sig() const { return sig_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    Coeff coefficient(BladeMask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    Coeff scalar_part() const { return coefficient(0); }

    std::set<int> grades() const {
        std::set<int> out;
        for (const auto& [mask, coeff] : terms_) out.insert(grade_of(mask));
        return out;
    }

    // The single grade of a homogeneous element; nullopt for 0 or mixed grades.
    std::optional<int> homogeneous_grade() const {
        auto g = grades();
        if (g.size() != 1) return std::nullopt;
        return *g.begin();
    }

    void add_term(BladeMask mask, Coeff coeff) {
        if (coeff == Coeff(0)) return;
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            terms_.emplace(mask, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == Coeff(0)) terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& other) {
        require_same_signature(other);
        for (const auto& [mask, coeff] : other.terms_) add_term(mask, coeff);
        return *this;
    }

    Multivector& operator-=(const Multivector& other) {
        require_same_signature(other);
        for (const auto& [mask, coeff] : other.terms_) add_term(mask, -coeff);
        return *this;
    }

    Multivector& operator*=(const Coeff& factor) {
        if (factor == Coeff(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [mask, coeff] : terms_) coeff *= factor;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(Multivector a) {
        for (auto& [mask, coeff] : a.terms_) coeff = -coeff;
        return a;
    }
    friend Multivector operator*(Multivector a, const Coeff& s) { return a *= s; }
    friend Multivector operator*(const Coeff& s, Multivector a) { return a *= s; }

    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.require_same_signature(b);
        Multivector out(a.sig_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                SignedBlade prod = blade_product(ma, mb, a.sig_);
                Coeff c = ca * cb;
                if (prod.sign < 0) c = -c;
                out.add_term(prod.mask, std::move(c));
            }
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    void require_same_signature(const Multivector& other) const {
        if (!(sig_ == other.sig_))
            throw SignatureMismatch("operands live in Cl(" + sig_.str() + ") and Cl(" + other.sig_.str() + ")");
    }

private:
    Signature sig_;
    TermMap terms_;
};

using MultivectorQ = Multivector<Rational>;
using MultivectorD = Multivector<double>;

template <typename Coeff>
Multivector<Coeff> geometric_product(const Multivector<Coeff>& a, const Multivector<Coeff>& b) {
    return a * b;
}

template <typename Coeff>
Multivector<Coeff> grade_project(const Multivector<Coeff>& a, int k) {
    if (k < 0 || k > a.sig().n())
        throw GradeOutOfRange("grade " + std::to_string(k) + " outside 0.." + std::to_string(a.sig().n()));
    Multivector<Coeff> out(a.sig());
    for (const auto& [mask, coeff] : a.terms())
        if (grade_of(mask) == k) out.add_term(mask, coeff);
    return out;
}

// Grade-wise dot product: the |r-s| part of each homogeneous product, scalar
// factors included. For basis blades the whole product a*b is one blade, so
// each term pair either survives intact or is dropped.
template <typename Coeff>
Multivector<Coeff> dot(const Multivector<Coeff>& a, const Multivector<Coeff>& b) {
    a.require_same_signature(b);
    Multivector<Coeff> out(a.sig());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            SignedBlade prod = blade_product(ma, mb, a.sig());
            if (grade_of(prod.mask) != std::abs(grade_of(ma) - grade_of(mb))) continue;
            Coeff c = ca * cb;
            if (prod.sign < 0) c = -c;
            out.add_term(prod.mask, std::move(c));
        }
    return out;
}

// Grade-wise wedge product: the r+s part, i.e. term pairs with disjoint masks.
template <typename Coeff>
Multivector<Coeff> wedge(const Multivector<Coeff>& a, const Multivector<Coeff>& b) {
    a.require_same_signature(b);
    Multivector<Coeff> out(a.sig());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            SignedBlade prod = blade_product(ma, mb, a.sig());
            Coeff c = ca * cb;
            if (prod.sign < 0) c = -c;
            out.add_term(prod.mask, std::move(c));
        }
    return out;
}

template <typename Coeff>
Multivector<Coeff> reversion(const Multivector<Coeff>& a) {
    Multivector<Coeff> out(a.sig());
    for (const auto& [mask, coeff] : a.terms())
        out.add_term(mask, reversion_sign(grade_of(mask)) < 0 ? -coeff : coeff);
    return out;
}

// Metric pairing g(A, B) = scalar part of B-dagger . A.
template <typename Coeff>
Coeff inner(const Multivector<Coeff>& a, const Multivector<Coeff>& b) {
    return dot(reversion(b), a).scalar_part();
}

template <typename Coeff>
Multivector<Coeff> hodge_dual(const Multivector<Coeff>& a) {
    return reversion(a) * Multivector<Coeff>::pseudoscalar(a.sig());
}

template <typename Coeff>
Multivector<Coeff> inverse(const Multivector<Coeff>& a) {
    Coeff norm2 = inner(a, a);
    if (norm2 == Coeff(0)) throw NullBlade("element has zero squared norm, no inverse");
    return reversion(a) * (Coeff(1) / norm2);
}

template <typename Coeff>
Multivector<Coeff> geometric_inverse(const Multivector<Coeff>& a) {
    return inverse(a) * Multivector<Coeff>::pseudoscalar(a.sig());
}

template <typename Coeff>
Multivector<Coeff> commutator(const Multivector<Coeff>& a, const Multivector<Coeff>& b) {
    return a * b - b * a;
}

template <typename Coeff>
Multivector<Coeff> anticommutator(const Multivector<Coeff>& a, const Multivector<Coeff>& b) {
    return a * b + b * a;
}

}  // namespace gaphase
