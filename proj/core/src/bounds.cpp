#include "gdseq/bounds.hpp"

#include <algorithm>

namespace gdseq {

long long m_upper(long long N, long long k) {
    if (N <= 0 || k <= 0) {
        return 0;
    }
    const long long q = N / k;
    const long long r = N % k;
    if (r == 0) {
        return k >= q ? q * (k - q + 1) : 0;
    }
    if (k >= q) {
        return r <= q ? q * (k - q + 1) - r : q * (k - q - 1) + r;
    }
    return 0;
}

long long m_lower(long long N, long long l) {
    if (N <= 0 || l <= 0) {
        return 0;
    }
    const long long q = N / l;
    const long long r = N % l;
    if (r == 0) {
        return l <= q ? l * (q - l + 1) : 0;
    }
    return l <= q ? l * (q - l) + r : 0;
}

std::vector<std::vector<BigCount>> box_counts(int k_max, int l, long long n_cap) {
    const auto len = static_cast<std::size_t>(std::max<long long>(n_cap, 0) + 1);
    std::vector<std::vector<BigCount>> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    std::vector<BigCount> poly(len);
    poly[0] = 1;
    out.push_back(poly);
    for (int k = 1; k <= k_max; ++k) {
        // poly *= 1 / (1 - q^k): running sums with stride k (coefficients stay >= 0).
        for (std::size_t i = static_cast<std::size_t>(k); i < len; ++i) {
            poly[i] += poly[i - static_cast<std::size_t>(k)];
        }
        // poly *= (1 - q^(k+l)), from the top so each coefficient reads the old value.
        const auto shift = static_cast<std::size_t>(k + l);
        for (std::size_t i = len; i-- > shift;) {
            poly[i] -= poly[i - shift];
        }
        out.push_back(poly);
    }
    return out;
}

}  // namespace gdseq
