#include "gdseq/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gdseq/rect_table.hpp"

namespace gdseq {

namespace {

// L'(N,i) = sum over k of P(N-k-i+1, k-1, i-1, i-k-1), read from slab i-1.
// Terms with k < N/i vanish (N - k - i + 1 > (k-1)(i-1)) and are skipped.
BigCount lprime_from_slab(const SlabView& slab, long long N, int i) {
    BigCount sum;
    const long long k_lo = std::max<long long>(1, (N + i - 1) / i);
    for (long long k = k_lo; k <= i - 2; ++k) {
        sum += slab.at(static_cast<int>(k - 1), N - k - i + 1, i - k - 1);
    }
    return sum;
}

// L(i) using the symmetry L'(N,i) = L'(i(i-1)-N, i): twice the even N below
// the midpoint i(i-1)/2, plus the midpoint itself when it is even.
BigCount harvest_l(const SlabView& slab, int i) {
    const long long mid = static_cast<long long>(i) * (i - 1) / 2;
    BigCount half;
    for (long long N = i + (i % 2); N < mid; N += 2) {
        half += lprime_from_slab(slab, N, i);
    }
    BigCount total = half + half;
    if (mid % 2 == 0 && mid >= i) {
        total += lprime_from_slab(slab, mid, i);
    }
    return total;
}

CountReport chain_rows(const std::vector<BigCount>& l_values, int n) {
    // l_values[i] = L(i) for i = 2..n. Bootstrap D(1) = 0, D0(1) = 1.
    CountReport report;
    BigCount d0_prev(1);
    for (int i = 2; i <= n; ++i) {
        CountRow row;
        row.n = i;
        row.L = l_values[static_cast<std::size_t>(i)];
        row.D = row.L + d0_prev;
        row.H = row.D - row.L;
        row.D0 = d0_prev + row.D;
        d0_prev = row.D0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace

CountReport count_all_improved(int n, const FillOptions& options) {
    if (n < 2) {
        throw std::invalid_argument("count needs n >= 2");
    }
    std::vector<BigCount> l_values(static_cast<std::size_t>(n) + 1);
    if (n >= 3) {
        RaggedSlabTable table(RaggedShape::for_length(n), options.memory_budget);
        table.fill(options, [&](const SlabView& slab) {
            const int i = slab.l() + 1;
            if (i >= 2 && i <= n) {
                l_values[static_cast<std::size_t>(i)] = harvest_l(slab, i);
            }
        });
    }
    return chain_rows(l_values, n);
}

BigCount count_L_baseline(int n, const FillOptions& options) {
    if (n < 3) {
        throw std::invalid_argument("baseline L(n) needs n >= 3");
    }
    RectangularTable table(RectShape::for_length(n), options.memory_budget);
    table.fill(options);
    const RectSlabView P = table.slab(n - 1);
    const long long top = static_cast<long long>(n) * (n - 1) / 2;
    BigCount S;
    for (long long i = n + (n % 2); i < top; i += 2) {
        for (long long j = 1; j <= std::min<long long>(n - 2, i - n + 1); ++j) {
            S += P.at(static_cast<int>(j - 1), i - j - n + 1, n - j - 1);
        }
    }
    S = S + S;
    if (top % 2 == 0) {
        for (long long j = 1; j <= std::min<long long>(n - 2, top - n + 1); ++j) {
            S += P.at(static_cast<int>(j - 1), top - j - n + 1, n - j - 1);
        }
    }
    return S;
}

CountReport count_all_baseline(int n, const FillOptions& options) {
    if (n < 2) {
        throw std::invalid_argument("count needs n >= 2");
    }
    std::vector<BigCount> l_values(static_cast<std::size_t>(n) + 1);
    for (int i = 3; i <= n; ++i) {
        l_values[static_cast<std::size_t>(i)] = count_L_baseline(i, options);
    }
    return chain_rows(l_values, n);
}

std::optional<std::string> check_report_identities(const CountReport& report) {
    const CountRow* prev = nullptr;
    for (const CountRow& row : report.rows) {
        const std::string at = "n=" + std::to_string(row.n) + ": ";
        if (row.L + row.H != row.D) {
            return at + "H != D - L";
        }
        std::optional<BigCount> d0_prev;
        if (prev != nullptr) {
            if (row.n != prev->n + 1) {
                return at + "rows are not consecutive";
            }
            d0_prev = prev->D0;
        } else if (row.n == 2) {
            d0_prev = BigCount(1);
        }
        if (d0_prev) {
            if (row.D != row.L + *d0_prev) {
                return at + "D != L + D0(n-1)";
            }
            if (row.D0 != *d0_prev + row.D) {
                return at + "D0(n) != D0(n-1) + D(n)";
            }
        }
        prev = &row;
    }
    return std::nullopt;
}

BigCount p_nkl_dp(long long N, int k, int l) {
    if (N < 0 || k < 0 || l < 0 || N > static_cast<long long>(k) * l) {
        return BigCount(0);
    }
    if (N == 0) {
        return BigCount(1);
    }
    const auto width = static_cast<std::size_t>(N) + 1;
    // Rolling over l: table[k'][N'] for the previous and current l.
    std::vector<std::vector<BigCount>> prev(static_cast<std::size_t>(k) + 1, std::vector<BigCount>(width));
    for (auto& row : prev) {
        row[0] = 1;
    }
    auto cur = prev;
    for (int ll = 1; ll <= l; ++ll) {
        for (int kk = 1; kk <= k; ++kk) {
            auto& out = cur[static_cast<std::size_t>(kk)];
            const auto& left = cur[static_cast<std::size_t>(kk - 1)];
            const auto& up = prev[static_cast<std::size_t>(kk)];
            const auto& diag = prev[static_cast<std::size_t>(kk - 1)];
            for (long long n = 1; n <= N; ++n) {
                const auto un = static_cast<std::size_t>(n);
                BigCount v = left[un] + up[un];
                const long long hook = n - kk - ll + 1;
                if (hook >= 0) {
                    v += diag[static_cast<std::size_t>(hook)];
                }
                v -= diag[un];
                out[un] = std::move(v);
            }
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(k)][static_cast<std::size_t>(N)];
}

BigCount p_nkls_dp(long long N, int k, int l, long long s, const FillOptions& options) {
    if (N < 0 || s < 0 || k < 0 || l < 0) {
        return BigCount(0);
    }
    if (N == 0) {
        return BigCount(1);
    }
    if (N > static_cast<long long>(k) * l) {
        return BigCount(0);
    }
    RaggedSlabTable table(RaggedShape{k, l, N}, options.memory_budget);
    table.fill(options);
    return table.slab(l).at(k, N, s);
}

BigCount g_count(long long N, const FillOptions& options) {
    if (N < 0 || N % 2 != 0) {
        throw std::invalid_argument("g_count needs an even N >= 0");
    }
    if (N == 0) {
        return BigCount(1);
    }
    const int side = static_cast<int>(N);
    RectangularTable table(RectShape{N, side, side}, options.memory_budget);
    table.fill(options);
    return table.slab(side).at(side, N, 0);
}

BigCount d_direct(int n, const FillOptions& options) {
    if (n < 2 || n > kDirectMaxN) {
        throw std::invalid_argument("d_direct supports 2 <= n <= " + std::to_string(kDirectMaxN));
    }
    const long long nn = n;
    RectangularTable table(RectShape{nn * (nn - 2), n - 2, n - 1}, options.memory_budget);
    table.fill(options);
    const RectSlabView P = table.slab(n - 1);
    BigCount total;
    for (long long N = nn + (nn % 2); N <= nn * (nn - 1); N += 2) {
        for (long long k = 1; k <= nn - 1; ++k) {
            total += P.at(static_cast<int>(k - 1), N - k - nn + 1, nn - k - 1);
        }
    }
    return total;
}

std::vector<std::pair<long long, BigCount>> lprime_series(int n, const FillOptions& options) {
    if (n < 3) {
        throw std::invalid_argument("lprime_series needs n >= 3");
    }
    const long long nn = n;
    RaggedSlabTable table(RaggedShape{n - 3, n - 1, (nn - 1) * (nn - 3)}, options.memory_budget);
    table.fill(options);
    const SlabView slab = table.slab(n - 1);
    std::vector<std::pair<long long, BigCount>> out;
    for (long long N = nn + (nn % 2); N <= nn * (nn - 2); N += 2) {
        out.emplace_back(N, lprime_from_slab(slab, N, n));
    }
    return out;
}

}  // namespace gdseq
