#pragma once

// Fixed-width cell arithmetic shared by the table fills.
//
// A cell is `width` little-endian 64-bit limbs. Every table sizes a cell so
// the count it finally holds is below 2^(64*width); the update
// a + b - c + d is then evaluated modulo 2^(64*width), which is exact even
// though the intermediate a + b + d may exceed the cell and an operand read
// from a wider row may be truncated.

#include <algorithm>
#include <cstdint>
#include <cstring>

namespace gdseq::detail {

inline constexpr int kMaxCellLimbs = 64;

__extension__ using u128 = unsigned __int128;

struct Operand {
    const std::uint64_t* limbs = nullptr;  // nullptr reads as zero
    int width = 0;
};

template <int W>
inline void load(const Operand& op, std::uint64_t (&out)[W]) {
    if (op.limbs == nullptr) {
        std::fill(out, out + W, 0);
        return;
    }
    const int n = std::min(W, op.width);
    std::memcpy(out, op.limbs, sizeof(std::uint64_t) * static_cast<std::size_t>(n));
    std::fill(out + n, out + W, 0);
}

/// out = a + b - c + d (mod 2^(64*W)).
template <int W>
inline void combine(const Operand& a, const Operand& b, const Operand& c, const Operand& d,
                    std::uint64_t* out) {
    std::uint64_t va[W];
    std::uint64_t vb[W];
    std::uint64_t vc[W];
    std::uint64_t vd[W];
    load(a, va);
    load(b, vb);
    load(c, vc);
    load(d, vd);
    u128 carry = 0;
    std::uint64_t borrow = 0;
    for (int i = 0; i < W; ++i) {
        const u128 sum =
            static_cast<u128>(va[i]) + vb[i] + vd[i] + carry;
        const auto lo = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
        const std::uint64_t t = lo - vc[i];
        const std::uint64_t b1 = lo < vc[i] ? 1 : 0;
        out[i] = t - borrow;
        borrow = b1 | (t < borrow ? 1 : 0);
    }
}

/// Runtime-width variant of combine for cells wider than the unrolled cases.
inline void combine_dynamic(int width, const Operand& a, const Operand& b, const Operand& c,
                            const Operand& d, std::uint64_t* out) {
    auto limb = [](const Operand& op, int i) -> std::uint64_t {
        return op.limbs != nullptr && i < op.width ? op.limbs[i] : 0;
    };
    u128 carry = 0;
    std::uint64_t borrow = 0;
    for (int i = 0; i < width; ++i) {
        const u128 sum =
            static_cast<u128>(limb(a, i)) + limb(b, i) + limb(d, i) + carry;
        const auto lo = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
        const std::uint64_t vc = limb(c, i);
        const std::uint64_t t = lo - vc;
        const std::uint64_t b1 = lo < vc ? 1 : 0;
        out[i] = t - borrow;
        borrow = b1 | (t < borrow ? 1 : 0);
    }
}

/// Limbs needed for a value of the given bit length (at least one).
inline int limbs_for_bits(std::size_t bits) {
    return std::max<int>(1, static_cast<int>((bits + 63) / 64));
}

}  // namespace gdseq::detail
