#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gdseq/bigcount.hpp"
#include "gdseq/ragged_table.hpp"

namespace gdseq {

/// Box of a rectangular table: N and s both in 0..n_max, k in 0..k_max,
/// l in 0..l_max rolled over two slabs.
struct RectShape {
    long long n_max = 0;
    int k_max = 0;
    int l_max = 0;

    /// The table used by the baseline L(n) computation.
    static RectShape for_length(int n);
};

class RectangularTable;

class RectSlabView {
public:
    int l() const { return l_; }
    /// P(N,k,l,s); throws std::out_of_range outside the box.
    BigCount at(int k, long long N, long long s) const;

private:
    friend class RectangularTable;
    RectSlabView(const RectangularTable& t, int l) : table_(&t), l_(l) {}
    const RectangularTable* table_;
    int l_;
};

/// Rectangular four-dimensional table of P(N,k,l,s) with a uniform cell width.
///
/// The s extent equals the N extent; since P(N,k,l,s) = P(N,k,l) once
/// s >= N, reads past the top of s are clamped to it.
class RectangularTable {
public:
    explicit RectangularTable(RectShape shape, std::size_t memory_budget = 0);

    const RectShape& shape() const { return shape_; }
    void fill(const FillOptions& options, const std::function<void(const RectSlabView&)>& on_slab = {});
    RectSlabView slab(int l) const;

    std::size_t cell_count() const { return 2 * slab_cells_; }
    std::size_t bytes() const { return words_.size() * sizeof(std::uint64_t); }
    int width() const { return width_; }

private:
    friend class RectSlabView;

    std::size_t cell_index(int parity, int k, long long N, long long s) const {
        const auto side = static_cast<std::size_t>(shape_.n_max) + 1;
        return ((static_cast<std::size_t>(parity) * (static_cast<std::size_t>(shape_.k_max) + 1) +
                 static_cast<std::size_t>(k)) * side + static_cast<std::size_t>(N)) * side +
               static_cast<std::size_t>(s);
    }
    void fill_row(int l, int k, long long N);

    RectShape shape_;
    int width_ = 1;
    std::size_t slab_cells_ = 0;
    std::vector<std::uint64_t> words_;
    int completed_l_ = 0;
};

}  // namespace gdseq
