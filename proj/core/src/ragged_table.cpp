#include "gdseq/ragged_table.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "cell_arith.hpp"
#include "gdseq/bounds.hpp"
#include "gdseq/errors.hpp"
#include "gdseq/thread_pool.hpp"

namespace gdseq {

using detail::Operand;

RaggedShape RaggedShape::for_length(int n) {
    if (n < 3) {
        throw std::invalid_argument("ragged table needs n >= 3");
    }
    const long long nn = n;
    // floor((n^2 + 3)/2 - 2n) == (n-1)(n-3)/2 rounded down.
    const long long cap = (nn * nn + 3) / 2 - 2 * nn;
    return RaggedShape{n - 3, n - 1, cap};
}

const RaggedShape& SlabView::shape() const { return table_->shape(); }

BigCount SlabView::at(int k, long long N, long long s) const {
    if (N < 0 || s < 0) {
        return BigCount(0);
    }
    if (N == 0) {
        return BigCount(1);
    }
    const RaggedShape& sh = table_->shape();
    if (k < 0 || k > sh.k_max) {
        throw std::out_of_range("k outside table: " + std::to_string(k));
    }
    if (k == 0 || l_ == 0 || N > static_cast<long long>(k) * l_) {
        return BigCount(0);
    }
    if (N > sh.n_extent(k)) {
        throw std::out_of_range("N outside table: " + std::to_string(N));
    }
    const std::size_t row = table_->row_id(k, N);
    const long long top = table_->row_cells_[row] - 1;
    const std::uint64_t* p = table_->cell_ptr(l_ & 1, row, std::min(s, top));
    return BigCount::from_limbs({p, table_->row_width_[row]});
}

RaggedSlabTable::RaggedSlabTable(RaggedShape shape, std::size_t memory_budget) : shape_(shape) {
    if (shape_.k_max < 0 || shape_.l_max < 0 || shape_.n_cap < 0) {
        throw std::invalid_argument("ragged table shape must be nonnegative");
    }
    // Row layout first, so the budget check happens before the big allocation.
    std::size_t rows = 0;
    k_first_row_.resize(static_cast<std::size_t>(shape_.k_max) + 1);
    for (int k = 0; k <= shape_.k_max; ++k) {
        k_first_row_[static_cast<std::size_t>(k)] = rows;
        rows += static_cast<std::size_t>(shape_.n_extent(k)) + 1;
    }
    row_offset_.resize(rows);
    row_cells_.resize(rows);
    row_width_.resize(rows);

    const auto bounds = box_counts(shape_.k_max, shape_.l_max, shape_.n_cap);
    std::size_t words = 0;
    for (int k = 0; k <= shape_.k_max; ++k) {
        const auto& bound = bounds[static_cast<std::size_t>(k)];
        for (long long N = 0; N <= shape_.n_extent(k); ++N) {
            const std::size_t row = row_id(k, N);
            const long long cells = m_upper(N, k) + 1;
            const int width = detail::limbs_for_bits(bound[static_cast<std::size_t>(N)].bit_length());
            if (width > detail::kMaxCellLimbs) {
                throw ResourceError("cell width exceeds supported limb count", 0, 0);
            }
            row_offset_[row] = words;
            row_cells_[row] = static_cast<std::uint32_t>(cells);
            row_width_[row] = static_cast<std::uint8_t>(width);
            words += static_cast<std::size_t>(cells) * static_cast<std::size_t>(width);
            slab_cells_ += static_cast<std::size_t>(cells);
        }
    }
    slab_words_ = words;

    const std::size_t required = 2 * slab_words_ * sizeof(std::uint64_t);
    const std::size_t budget = memory_budget != 0 ? memory_budget : available_memory_bytes();
    if (required > budget) {
        throw ResourceError("ragged table needs " + std::to_string(required) +
                                " bytes but the memory budget is " + std::to_string(budget),
                            required, budget);
    }
    words_.assign(2 * slab_words_, 0);
    for (int parity = 0; parity < 2; ++parity) {
        for (int k = 0; k <= shape_.k_max; ++k) {
            cell_ptr(parity, row_id(k, 0), 0)[0] = 1;
        }
    }
}

long long RaggedSlabTable::row_cells(int k, long long N) const { return row_cells_[row_id(k, N)]; }

int RaggedSlabTable::row_width(int k, long long N) const { return row_width_[row_id(k, N)]; }

BigCount RaggedSlabTable::raw_cell(int parity, int k, long long N, long long s) const {
    if (k < 0 || k > shape_.k_max || N < 0 || N > shape_.n_extent(k)) {
        throw std::out_of_range("raw cell outside table");
    }
    const std::size_t row = row_id(k, N);
    if (s < 0 || s >= row_cells_[row]) {
        throw std::out_of_range("raw cell s outside row");
    }
    return BigCount::from_limbs({cell_ptr(parity & 1, row, s), row_width_[row]});
}

SlabView RaggedSlabTable::slab(int l) const {
    if (l < 0 || l > completed_l_ || l + 1 < completed_l_) {
        throw std::out_of_range("slab " + std::to_string(l) + " is not resident");
    }
    return SlabView(*this, l);
}

namespace {

template <int W>
void combine_row(long long s_lo, long long s_hi, const std::uint64_t* a, long long a_top, int a_w,
                 const std::uint64_t* b, const std::uint64_t* c, int c_w, const std::uint64_t* d,
                 long long d_top, int d_w, long long d_shift, std::uint64_t* out, int w) {
    for (long long s = s_lo; s <= s_hi; ++s) {
        const Operand oa{a ? a + std::min(s, a_top) * a_w : nullptr, a_w};
        const Operand ob{b + s * w, w};
        const Operand oc{c ? c + std::min(s, a_top) * c_w : nullptr, c_w};
        const long long sd = s + d_shift;
        const Operand od{d && sd >= 0 ? d + std::min(sd, d_top) * d_w : nullptr, d_w};
        if constexpr (W > 0) {
            detail::combine<W>(oa, ob, oc, od, out + s * w);
        } else {
            detail::combine_dynamic(w, oa, ob, oc, od, out + s * w);
        }
    }
}

}  // namespace

void RaggedSlabTable::fill_row(int l, int k, long long N) {
    const std::size_t row = row_id(k, N);
    const long long s_hi = static_cast<long long>(row_cells_[row]) - 1;
    const long long s_lo = m_lower(N, l);
    if (s_lo > s_hi) {
        return;
    }
    const int cur = l & 1;
    const int prev = cur ^ 1;
    const int w = row_width_[row];

    // P(N,k-1,l,s) and P(N,k-1,l-1,s) share row (k-1, N).
    const std::uint64_t* a = nullptr;
    const std::uint64_t* c = nullptr;
    long long a_top = 0;
    int a_w = 0;
    if (N <= shape_.n_extent(k - 1)) {
        const std::size_t r = row_id(k - 1, N);
        a = cell_ptr(cur, r, 0);
        c = cell_ptr(prev, r, 0);
        a_top = row_cells_[r] - 1;
        a_w = row_width_[r];
    }
    // P(N-k-l+1, k-1, l-1, s+l-k-1)
    const long long nd = N - k - l + 1;
    const std::uint64_t* d = nullptr;
    long long d_top = 0;
    int d_w = 0;
    if (nd >= 0 && nd <= shape_.n_extent(k - 1)) {
        const std::size_t r = row_id(k - 1, nd);
        d = cell_ptr(prev, r, 0);
        d_top = row_cells_[r] - 1;
        d_w = row_width_[r];
    }
    const long long d_shift = static_cast<long long>(l) - k - 1;
    const std::uint64_t* b = cell_ptr(prev, row, 0);
    std::uint64_t* out = cell_ptr(cur, row, 0);

    switch (w) {
        case 1: combine_row<1>(s_lo, s_hi, a, a_top, a_w, b, c, a_w, d, d_top, d_w, d_shift, out, w); break;
        case 2: combine_row<2>(s_lo, s_hi, a, a_top, a_w, b, c, a_w, d, d_top, d_w, d_shift, out, w); break;
        case 3: combine_row<3>(s_lo, s_hi, a, a_top, a_w, b, c, a_w, d, d_top, d_w, d_shift, out, w); break;
        case 4: combine_row<4>(s_lo, s_hi, a, a_top, a_w, b, c, a_w, d, d_top, d_w, d_shift, out, w); break;
        default: combine_row<0>(s_lo, s_hi, a, a_top, a_w, b, c, a_w, d, d_top, d_w, d_shift, out, w); break;
    }
}

void RaggedSlabTable::fill(const FillOptions& options, const std::function<void(const SlabView&)>& on_slab) {
    if (completed_l_ != 0) {
        throw std::logic_error("ragged table already filled");
    }
    const auto start = std::chrono::steady_clock::now();
    ThreadPool pool(options.threads);
    if (on_slab) {
        on_slab(SlabView(*this, 0));
    }
    for (int l = 1; l <= shape_.l_max; ++l) {
        for (int k = 1; k <= shape_.k_max; ++k) {
            const long long n_hi = std::min(static_cast<long long>(l) * k, shape_.n_extent(k));
            // Rows of one (l,k) pane only read panes (k-1,l), (k,l-1), (k-1,l-1).
            pool.parallel_for(1, n_hi + 1, [&](std::int64_t lo, std::int64_t hi) {
                for (std::int64_t N = lo; N < hi; ++N) {
                    fill_row(l, k, N);
                }
            });
        }
        completed_l_ = l;
        if (options.on_progress) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            options.on_progress(ProgressEvent{l, shape_.l_max, elapsed.count(), bytes()});
        }
        if (on_slab) {
            on_slab(SlabView(*this, l));
        }
    }
}

RaggedSlabTable fill_improved(int n, const FillOptions& options,
                              const std::function<void(const SlabView&)>& on_slab) {
    RaggedSlabTable table(RaggedShape::for_length(n), options.memory_budget);
    table.fill(options, on_slab);
    return table;
}

}  // namespace gdseq
