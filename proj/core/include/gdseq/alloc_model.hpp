#pragma once

#include <string>
#include <vector>

#include "gdseq/bigcount.hpp"

namespace gdseq {

/// Element counts of the two tables for length n.
struct AllocRow {
    int n = 0;
    BigCount f1;        ///< rectangular baseline table
    BigCount f4;        ///< ragged table
    std::string ratio;  ///< f4/f1, 7 decimals, round half to even

    friend bool operator==(const AllocRow&, const AllocRow&) = default;
};

/// 2 (n-2) (n(n-3)/2 + 1)^2, for n >= 4.
BigCount f1(int n);

/// Cells of the ragged table for length n (both slabs), for n >= 4.
BigCount f4(int n);

/// num/den rounded half-to-even to `decimals` places, as a decimal string.
std::string format_ratio(const BigCount& num, const BigCount& den, int decimals = 7);

std::vector<AllocRow> alloc_table(const std::vector<int>& ns);

}  // namespace gdseq
