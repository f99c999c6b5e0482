#include "gdseq/oracle.hpp"

#include <algorithm>

#include "gdseq/partition.hpp"

namespace gdseq::oracle {

namespace {

template <typename Pred>
BigCount count_if_partitions(long long N, int k, int l, Pred pred) {
    std::uint64_t count = 0;
    for_each_partition(N, k, l, [&](const Partition& p) {
        if (pred(p)) {
            ++count;
        }
        return true;
    });
    return BigCount(count);
}

// Graphical partitions of N with exactly l parts filtered by largest part.
template <typename LargestPred>
BigCount graphical_exact_length(long long N, int l, LargestPred largest_ok) {
    if (N < 0 || l < 1) {
        return BigCount(0);
    }
    return count_if_partitions(N, static_cast<int>(std::min<long long>(N, l - 1)), l,
                               [&](const Partition& p) {
                                   return p.length() == l && largest_ok(p.largest()) &&
                                          is_graphical(p);
                               });
}

}  // namespace

BigCount p_nkls_bruteforce(long long N, int k, int l, long long s) {
    if (N < 0 || s < 0 || k < 0 || l < 0) {
        return BigCount(0);
    }
    return count_if_partitions(N, k, l,
                               [&](const Partition& p) { return satisfies_s_condition(p, s); });
}

BigCount p_nkl_bruteforce(long long N, int k, int l) {
    if (N < 0 || k < 0 || l < 0) {
        return BigCount(0);
    }
    return count_if_partitions(N, k, l, [](const Partition&) { return true; });
}

BigCount gprime_bruteforce(long long N, int l) {
    return graphical_exact_length(N, l, [](int) { return true; });
}

BigCount hprime_bruteforce(long long N, int l) {
    return graphical_exact_length(N, l, [l](int largest) { return largest == l - 1; });
}

BigCount lprime_bruteforce(long long N, int l) {
    return graphical_exact_length(N, l, [l](int largest) { return largest < l - 1; });
}

BigCount d_bruteforce(int n) {
    BigCount total;
    if (n < 1) {
        return total;
    }
    for (long long N = 0; N <= static_cast<long long>(n) * (n - 1); N += 2) {
        total += gprime_bruteforce(N, n);
    }
    return total;
}

BigCount e_bruteforce(int n) {
    BigCount total;
    if (n < 1) {
        return total;
    }
    for (long long N = 0; N <= static_cast<long long>(n) * (n - 1); N += 2) {
        total += count_if_partitions(N, n - 1, n, [n](const Partition& p) { return p.length() == n; });
    }
    return total;
}

BigCount g_bruteforce(long long N) {
    if (N < 0) {
        return BigCount(0);
    }
    return count_if_partitions(N, static_cast<int>(N), static_cast<int>(N),
                               [](const Partition& p) { return is_graphical(p); });
}

std::optional<std::pair<long long, long long>> corank_extremes_bruteforce(long long N, int k, int l) {
    std::optional<std::pair<long long, long long>> result;
    for_each_partition(N, k, l, [&](const Partition& p) {
        long long prefix = 0;
        int j = 0;
        for (const int r : coranks(p)) {
            ++j;
            prefix += r;
            const long long value = j - prefix;
            if (!result) {
                result.emplace(value, value);
            } else {
                result->first = std::min(result->first, value);
                result->second = std::max(result->second, value);
            }
        }
        return true;
    });
    return result;
}

}  // namespace gdseq::oracle
