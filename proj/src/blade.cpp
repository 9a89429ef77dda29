#include "gaphase/blade.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace gaphase {

int reorder_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

namespace {

int product_sign(BladeMask a, BladeMask b, const Signature& sig) {
    int sign = reorder_sign(a, b);
    BladeMask common = a & b;
    while (common != 0) {
        int i = std::countr_zero(common);
        sign *= sig.metric_sign(i);
        common &= common - 1;
    }
    return sign;
}

// Precomputed sign tables per signature for dimensions small enough that the
// 4^n bytes are cheap. Larger dimensions fall back to the direct formula.
constexpr int kMemoMaxDimension = 8;

const std::int8_t* memo_table(const Signature& sig) {
    static std::map<std::pair<int, int>, std::vector<std::int8_t>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(sig.p(), sig.q());
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::size_t count = sig.blade_count();
        std::vector<std::int8_t> table(count * count);
        for (BladeMask a = 0; a < count; ++a)
            for (BladeMask b = 0; b < count; ++b)
                table[(std::size_t{a} << sig.n()) | b] = static_cast<std::int8_t>(product_sign(a, b, sig));
        it = cache.emplace(key, std::move(table)).first;
    }
    return it->second.data();
}

}  // namespace

SignedBlade blade_product(BladeMask a, BladeMask b, const Signature& sig) {
    BladeMask limit = static_cast<BladeMask>(sig.blade_count());
    if (a >= limit || b >= limit) throw GradeOutOfRange("blade mask outside the algebra");
    int sign;
    if (sig.n() <= kMemoMaxDimension) {
        sign = memo_table(sig)[(std::size_t{a} << sig.n()) | b];
    } else {
        sign = product_sign(a, b, sig);
    }
    return {a ^ b, sign};
}

std::vector<int> blade_indices(BladeMask mask) {
    std::vector<int> indices;
    while (mask != 0) {
        indices.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return indices;
}

std::string blade_name(BladeMask mask) {
    if (mask == 0) return "1";
    auto indices = blade_indices(mask);
    bool wide = indices.back() > 9;
    std::string out = "e";
    if (wide) out += '{';
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (wide && i > 0) out += ',';
        out += std::to_string(indices[i]);
    }
    if (wide) out += '}';
    return out;
}

}  // namespace gaphase
