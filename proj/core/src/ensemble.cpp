#include "gdseq/ensemble.hpp"

#include <stdexcept>

namespace gdseq {

BigCount uniform_below(const BigCount& bound, Rng& rng) {
    if (bound.is_zero()) {
        throw std::invalid_argument("uniform_below needs a positive bound");
    }
    const std::size_t bits = bound.bit_length();
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - (words - 1) * 64;
    const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    std::vector<std::uint64_t> limbs(words);
    for (;;) {
        for (auto& w : limbs) {
            w = rng();
        }
        limbs.back() &= top_mask;
        BigCount candidate = BigCount::from_limbs(limbs);
        if (candidate < bound) {
            return candidate;
        }
    }
}

EnsembleTable::EnsembleTable(int n) : n_(n) {
    if (n < 2) {
        throw std::invalid_argument("ensemble needs n >= 2");
    }
    q_.resize(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n - 1) * 2);
    for (int j = 0; j <= n; ++j) {
        for (int m = 0; m <= n - 2; ++m) {
            for (int b = 0; b < 2; ++b) {
                BigCount& cell = q_[index(j, m, b)];
                if (j == 0 || m == 0) {
                    cell = BigCount(b == 0 ? 1 : 0);
                } else {
                    cell = q_[index(j, m - 1, b)] + q_[index(j - 1, m, b ^ (m & 1))];
                }
            }
        }
    }
}

const BigCount& EnsembleTable::count(int j, int m, int parity) const {
    if (j < 0 || j > n_ || m < 0 || m > n_ - 2 || parity < 0 || parity > 1) {
        throw std::out_of_range("ensemble index out of range");
    }
    return q_[index(j, m, parity)];
}

Partition EnsembleTable::sample(Rng& rng) const {
    int j = n_;
    int m = n_ - 2;
    int b = n_ % 2;
    if (count(j, m, b).is_zero()) {
        throw std::logic_error("empty ensemble");
    }
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n_));
    // At (j, m, b) either no part equals m, or one part m is split off.
    while (j > 0 && m > 0) {
        const BigCount& total = count(j, m, b);
        const BigCount& skip = count(j, m - 1, b);
        if (uniform_below(total, rng) < skip) {
            --m;
        } else {
            parts.push_back(m + 1);
            --j;
            b ^= m & 1;
        }
    }
    parts.resize(static_cast<std::size_t>(n_), 1);
    return Partition(std::move(parts));
}

BigCount e_count(int n) { return EnsembleTable(n).e_count(); }

Partition sample_uniform(int n, Rng& rng) { return EnsembleTable(n).sample(rng); }

}  // namespace gdseq
