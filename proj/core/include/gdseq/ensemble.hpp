#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gdseq/bigcount.hpp"
#include "gdseq/partition.hpp"

namespace gdseq {

/// Random source used by the sampler and estimator. std::mt19937_64 is fully
/// specified by the standard, so seeded streams are identical on every platform.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on random bit strings.
/// Throws std::invalid_argument when bound is zero.
BigCount uniform_below(const BigCount& bound, Rng& rng);

/// Counts of partitions into at most j parts, each at most m, with sum parity
/// b, for j <= n and m <= n-2.
///
/// Subtracting 1 from every part maps the E(n) ensemble (exactly n parts in
/// [1, n-1], even sum) onto partitions into at most n parts in [0, n-2] whose
/// sum has the parity of n, so E(n) = count(n, n-2, n mod 2).
class EnsembleTable {
public:
    explicit EnsembleTable(int n);

    int n() const { return n_; }
    const BigCount& count(int j, int m, int parity) const;
    /// |E(n)|
    const BigCount& e_count() const { return count(n_, n_ - 2, n_ % 2); }

    /// One member of E(n), exactly uniformly distributed.
    Partition sample(Rng& rng) const;

private:
    std::size_t index(int j, int m, int parity) const {
        return (static_cast<std::size_t>(j) * static_cast<std::size_t>(n_ - 1) +
                static_cast<std::size_t>(m)) * 2 + static_cast<std::size_t>(parity);
    }

    int n_;
    std::vector<BigCount> q_;
};

/// |E(n)| for n >= 2.
BigCount e_count(int n);

/// A uniform member of E(n) (n >= 2); builds a table on every call, so
/// prefer EnsembleTable::sample in loops.
Partition sample_uniform(int n, Rng& rng);

}  // namespace gdseq
