#include "gdseq/alloc_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gdseq {

namespace {

void require_length(int n) {
    if (n < 4) {
        throw std::invalid_argument("allocation model needs n >= 4");
    }
}

// Sum of M'(N,k) + 1 over N in [0, hi] for a fixed k >= 1, block by block in
// q = N / k. Inside a block M' is piecewise linear in r = N mod k:
//   r = 0           q(k-q+1)
//   1 <= r <= q     q(k-q+1) - r
//   q < r < k       q(k-q-1) + r
// and M' = 0 once q > k.
long long ragged_row_cells(long long k, long long hi) {
    long long total = hi + 1;  // the "+1" of every row
    for (long long q = 0; q <= k && q * k <= hi; ++q) {
        const long long r_max = std::min(k - 1, hi - q * k);
        const long long base = q * (k - q + 1);
        // r = 0
        total += base;
        // 1 <= r <= min(q, r_max)
        const long long a_hi = std::min(q, r_max);
        if (a_hi >= 1) {
            total += a_hi * base - a_hi * (a_hi + 1) / 2;
        }
        // q < r <= r_max
        if (r_max > q) {
            const long long cnt = r_max - q;
            const long long rsum = (q + 1 + r_max) * cnt / 2;
            total += cnt * q * (k - q - 1) + rsum;
        }
    }
    return total;
}

}  // namespace

BigCount f1(int n) {
    require_length(n);
    const long long nn = n;
    const BigCount side(static_cast<std::uint64_t>(nn * (nn - 3) / 2 + 1));
    return BigCount(static_cast<std::uint64_t>(2 * (nn - 2))) * side * side;
}

BigCount f4(int n) {
    require_length(n);
    const long long nn = n;
    const long long cap = (nn * nn + 3) / 2 - 2 * nn;
    BigCount total;
    for (long long k = 0; k <= nn - 3; ++k) {
        const long long hi = std::min(k * (nn - 1), cap);
        const long long cells = k == 0 ? hi + 1 : ragged_row_cells(k, hi);
        total += BigCount(static_cast<std::uint64_t>(cells));
    }
    return total + total;
}

std::string format_ratio(const BigCount& num, const BigCount& den, int decimals) {
    BigCount scale(1);
    for (int i = 0; i < decimals; ++i) {
        scale *= BigCount(10);
    }
    const BigCount scaled = num * scale;
    BigCount q = scaled / den;
    const BigCount r = scaled % den;
    const BigCount twice = r + r;
    if (twice > den || (twice == den && q.is_odd())) {
        q += BigCount(1);
    }
    const std::string whole = (q / scale).to_string();
    std::string frac = (q % scale).to_string();
    if (decimals == 0) {
        return whole;
    }
    frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
    return whole + "." + frac;
}

std::vector<AllocRow> alloc_table(const std::vector<int>& ns) {
    std::vector<AllocRow> rows;
    rows.reserve(ns.size());
    for (const int n : ns) {
        AllocRow row;
        row.n = n;
        row.f1 = f1(n);
        row.f4 = f4(n);
        row.ratio = format_ratio(row.f4, row.f1);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gdseq
