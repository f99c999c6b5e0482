#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdseq/bigcount.hpp"
#include "gdseq/ragged_table.hpp"

namespace gdseq {

/// One length's worth of counts.
///   L  zero-free graphical sequences with largest term below n-1
///   H  ... with largest term exactly n-1
///   D  all zero-free graphical sequences of length n (D = L + H)
///   D0 graphical sequences of length n, zeros allowed
struct CountRow {
    int n = 0;
    BigCount L;
    BigCount H;
    BigCount D;
    BigCount D0;

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct CountReport {
    std::vector<CountRow> rows;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Rows for every length 2..n from a single ragged-table fill (n >= 2).
/// L(i) is harvested from slab i-1 as soon as it completes.
CountReport count_all_improved(int n, const FillOptions& options = {});

/// L(n) from the rectangular baseline table (n >= 3).
BigCount count_L_baseline(int n, const FillOptions& options = {});

/// Rows 2..n where every L(i) comes from its own baseline table.
CountReport count_all_baseline(int n, const FillOptions& options = {});

/// Checks D = L + D0(n-1), H = D - L and D0(n) = D0(n-1) + D(n) along the
/// report. Returns a description of the first violation, if any.
std::optional<std::string> check_report_identities(const CountReport& report);

/// |P(N,k,l)| from the three-variate recurrence.
BigCount p_nkl_dp(long long N, int k, int l);

/// A single P(N,k,l,s) from a dedicated ragged fill over the box (k, l, N).
BigCount p_nkls_dp(long long N, int k, int l, long long s, const FillOptions& options = {});

/// Number of graphical partitions of an even N, as P(N,N,N,0) from a
/// dedicated rectangular fill. Throws std::invalid_argument for odd or
/// negative N.
BigCount g_count(long long N, const FillOptions& options = {});

/// Largest n accepted by d_direct.
inline constexpr int kDirectMaxN = 16;

/// D(n) summed directly over G'(N,n) for even N (2 <= n <= kDirectMaxN).
BigCount d_direct(int n, const FillOptions& options = {});

/// L'(N,n) for every even N in [n, n(n-2)], in increasing N (n >= 3).
std::vector<std::pair<long long, BigCount>> lprime_series(int n, const FillOptions& options = {});

}  // namespace gdseq
