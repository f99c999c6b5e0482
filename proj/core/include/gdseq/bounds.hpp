#pragma once

#include <vector>

#include "gdseq/bigcount.hpp"

namespace gdseq {

/// Saturation index M'(N,k): P(N,k,l,s) no longer changes once s >= M'(N,k).
/// Zero when N == 0 or k == 0.
long long m_upper(long long N, long long k);

/// Vanishing threshold m'(N,l): P(N,k,l,s) == 0 for 0 <= s < m'(N,l).
/// Zero when N == 0 or l == 0.
long long m_lower(long long N, long long l);

/// Coefficients P(0..n_cap, k, l) of the Gaussian binomial [k+l choose k],
/// one vector per k in 0..k_max. Used to size table cells exactly.
std::vector<std::vector<BigCount>> box_counts(int k_max, int l, long long n_cap);

}  // namespace gdseq
