#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gdseq/bigcount.hpp"

namespace gdseq {

/// Progress report emitted after each completed l-slab.
struct ProgressEvent {
    int slab = 0;     ///< value of l just completed
    int l_max = 0;
    double elapsed_seconds = 0.0;
    std::size_t resident_bytes = 0;  ///< table storage in bytes
};

struct FillOptions {
    unsigned threads = 0;            ///< 0 = hardware concurrency
    std::size_t memory_budget = 0;   ///< bytes; 0 = currently available memory
    std::function<void(const ProgressEvent&)> on_progress;
};

/// Index ranges of a ragged table: k in 0..k_max, l in 0..l_max (rolled over
/// two slabs), N in 0..min(k*l_max, n_cap), s in 0..M'(N,k).
struct RaggedShape {
    int k_max = 0;
    int l_max = 0;
    long long n_cap = 0;

    long long n_extent(int k) const {
        return std::min<long long>(static_cast<long long>(k) * l_max, n_cap);
    }

    /// Shape needed to harvest L(i) for every i <= n: k <= n-3, l <= n-1,
    /// N <= (n-1)(n-3)/2.
    static RaggedShape for_length(int n);
};

class RaggedSlabTable;

/// Read access to one completed slab, P(., ., l, .) for a fixed l.
class SlabView {
public:
    int l() const { return l_; }
    const RaggedShape& shape() const;

    /// P(N,k,l,s) with the usual conventions: 0 for N < 0 or s < 0, 1 for
    /// N == 0, saturated reads for s > M'(N,k). Throws std::out_of_range for
    /// k > k_max or an N beyond the stored extent that is not provably zero.
    BigCount at(int k, long long N, long long s) const;

private:
    friend class RaggedSlabTable;
    SlabView(const RaggedSlabTable& table, int l) : table_(&table), l_(l) {}

    const RaggedSlabTable* table_;
    int l_;
};

/// Two rolling slabs of P(N,k,l,s) with ragged N and s extents.
///
/// Row (k,N) holds M'(N,k)+1 cells; the top cell stores the saturated value.
/// Each row's cell width in limbs is sized from P(N,k,l_max), which bounds
/// every value the row can hold, so arithmetic stays exact.
class RaggedSlabTable {
public:
    /// Allocates zeroed storage and seeds P(0,k,l,0) = 1 in both slabs.
    /// Throws ResourceError when the storage exceeds the memory budget.
    explicit RaggedSlabTable(RaggedShape shape, std::size_t memory_budget = 0);

    const RaggedShape& shape() const { return shape_; }

    /// Fills slabs l = 1..l_max in order. on_slab sees slab 0 right after
    /// seeding and every slab right after it completes, before it is
    /// overwritten.
    void fill(const FillOptions& options, const std::function<void(const SlabView&)>& on_slab = {});

    /// The slab for l; valid for the last two completed values of l.
    SlabView slab(int l) const;
    int completed_l() const { return completed_l_; }

    /// Number of stored cells across both slabs (the allocation size).
    std::size_t cell_count() const { return 2 * slab_cells_; }
    std::size_t bytes() const { return words_.size() * sizeof(std::uint64_t); }
    /// M'(N,k) + 1.
    long long row_cells(int k, long long N) const;
    int row_width(int k, long long N) const;
    /// Raw cell [parity][k][N][s] with s < row_cells(k, N).
    BigCount raw_cell(int parity, int k, long long N, long long s) const;

private:
    friend class SlabView;

    std::size_t row_id(int k, long long N) const {
        return k_first_row_[static_cast<std::size_t>(k)] + static_cast<std::size_t>(N);
    }
    const std::uint64_t* cell_ptr(int parity, std::size_t row, long long s) const {
        return words_.data() + static_cast<std::size_t>(parity) * slab_words_ + row_offset_[row] +
               static_cast<std::size_t>(s) * row_width_[row];
    }
    std::uint64_t* cell_ptr(int parity, std::size_t row, long long s) {
        return words_.data() + static_cast<std::size_t>(parity) * slab_words_ + row_offset_[row] +
               static_cast<std::size_t>(s) * row_width_[row];
    }
    void fill_row(int l, int k, long long N);

    RaggedShape shape_;
    std::vector<std::size_t> k_first_row_;
    std::vector<std::size_t> row_offset_;   // word offset of the row within a slab
    std::vector<std::uint32_t> row_cells_;  // M'(N,k) + 1
    std::vector<std::uint8_t> row_width_;   // limbs per cell
    std::size_t slab_words_ = 0;
    std::size_t slab_cells_ = 0;
    std::vector<std::uint64_t> words_;
    int completed_l_ = 0;
};

/// Builds the table for length n (n >= 3) and fills it, streaming slabs.
RaggedSlabTable fill_improved(int n, const FillOptions& options = {},
                              const std::function<void(const SlabView&)>& on_slab = {});

}  // namespace gdseq
