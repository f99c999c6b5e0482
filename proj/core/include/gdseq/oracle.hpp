#pragma once

#include <optional>
#include <utility>

#include "gdseq/bigcount.hpp"

// Definition-level brute-force counters. Everything here enumerates
// partitions one by one; nothing is memoized. These are the ground truth the
// dynamic programs are tested against, so keep them obvious.
namespace gdseq::oracle {

/// |P(N,k,l,s)| straight from the corank condition. Zero for s < 0 or N < 0.
BigCount p_nkls_bruteforce(long long N, int k, int l, long long s);

/// |P(N,k,l)|: partitions of N into at most l parts, each at most k.
BigCount p_nkl_bruteforce(long long N, int k, int l);

/// Graphical partitions of N with exactly l parts.
BigCount gprime_bruteforce(long long N, int l);
/// ... and largest part exactly l-1.
BigCount hprime_bruteforce(long long N, int l);
/// ... and largest part below l-1.
BigCount lprime_bruteforce(long long N, int l);

/// Zero-free graphical degree sequences of length n.
BigCount d_bruteforce(int n);
/// Partitions with exactly n parts, each in [1, n-1], with even sum.
BigCount e_bruteforce(int n);

/// Graphical partitions of N (any number of parts).
BigCount g_bruteforce(long long N);

/// (min, max) of j - (r_1 + ... + r_j) over every partition in P(N,k,l) and
/// every 1 <= j <= its Durfee side. std::nullopt when P(N,k,l) has no
/// partition with a nonempty Durfee square.
std::optional<std::pair<long long, long long>> corank_extremes_bruteforce(long long N, int k, int l);

}  // namespace gdseq::oracle
