#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "gaphase/errors.hpp"

namespace gaphase {

// Basis blade encoded as a bitmask: bit i set means the factor e_{i+1} is
// present. Mask 0 is the scalar 1, the all-ones mask is the pseudoscalar.
using BladeMask = std::uint32_t;

// Dense tables are 2^n x 2^n; 12 keeps them comfortably in memory.
inline constexpr int kMaxDimension = 12;

// Metric signature of Cl(p,q): e_1..e_p square to +1, e_{p+1}..e_{p+q} to -1.
class Signature {
public:
    Signature(int p, int q) : p_(p), q_(q) {
        if (p < 0 || q < 0) throw UnsupportedSignature("signature components must be non-negative");
        if (p + q > kMaxDimension)
            throw DimensionTooLarge("dimension " + std::to_string(p + q) + " exceeds supported maximum " +
                                    std::to_string(kMaxDimension));
    }

    static Signature euclidean(int n) { return Signature(n, 0); }

    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return p_ + q_; }
    bool is_euclidean() const { return q_ == 0; }

    // Square of the basis vector with 0-based index i.
    int metric_sign(int i) const {
        if (i < 0 || i >= n()) throw GradeOutOfRange("basis vector index out of range");
        return i < p_ ? 1 : -1;
    }

    BladeMask pseudoscalar_mask() const { return (BladeMask{1} << n()) - 1; }
    std::size_t blade_count() const { return std::size_t{1} << n(); }

    std::string str() const { return std::to_string(p_) + "," + std::to_string(q_); }

    friend bool operator==(const Signature& a, const Signature& b) = default;

private:
    int p_;
    int q_;
};

}  // namespace gaphase
