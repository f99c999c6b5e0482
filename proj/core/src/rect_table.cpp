#include "gdseq/rect_table.hpp"

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

RectShape RectShape::for_length(int n) {
    if (n < 3) {
        throw std::invalid_argument("baseline table needs n >= 3");
    }
    const long long nn = n;
    return RectShape{nn * (nn - 3) / 2, n - 3, n - 1};
}

BigCount RectSlabView::at(int k, long long N, long long s) const {
    if (N < 0 || s < 0) {
        return BigCount(0);
    }
    const RectShape& sh = table_->shape();
    if (k < 0 || k > sh.k_max || N > sh.n_max) {
        throw std::out_of_range("outside rectangular table");
    }
    const std::size_t idx = table_->cell_index(l_ & 1, k, N, std::min(s, sh.n_max));
    const auto w = static_cast<std::size_t>(table_->width_);
    return BigCount::from_limbs({table_->words_.data() + idx * w, w});
}

RectangularTable::RectangularTable(RectShape shape, std::size_t memory_budget) : shape_(shape) {
    if (shape_.n_max < 0 || shape_.k_max < 0 || shape_.l_max < 0) {
        throw std::invalid_argument("rectangular table shape must be nonnegative");
    }
    const auto bounds = box_counts(shape_.k_max, shape_.l_max, shape_.n_max);
    std::size_t bits = 1;
    for (const auto& row : bounds) {
        for (const auto& v : row) {
            bits = std::max(bits, v.bit_length());
        }
    }
    width_ = detail::limbs_for_bits(bits);
    if (width_ > detail::kMaxCellLimbs) {
        throw ResourceError("cell width exceeds supported limb count", 0, 0);
    }
    const auto side = static_cast<std::size_t>(shape_.n_max) + 1;
    slab_cells_ = (static_cast<std::size_t>(shape_.k_max) + 1) * side * side;
    const std::size_t required = 2 * slab_cells_ * static_cast<std::size_t>(width_) * sizeof(std::uint64_t);
    const std::size_t budget = memory_budget != 0 ? memory_budget : available_memory_bytes();
    if (required > budget) {
        throw ResourceError("rectangular table needs " + std::to_string(required) +
                                " bytes but the memory budget is " + std::to_string(budget),
                            required, budget);
    }
    words_.assign(2 * slab_cells_ * static_cast<std::size_t>(width_), 0);
    // P(0,k,l,s) = 1 for every s >= 0.
    for (int parity = 0; parity < 2; ++parity) {
        for (int k = 0; k <= shape_.k_max; ++k) {
            for (long long s = 0; s <= shape_.n_max; ++s) {
                words_[cell_index(parity, k, 0, s) * static_cast<std::size_t>(width_)] = 1;
            }
        }
    }
}

RectSlabView RectangularTable::slab(int l) const {
    if (l < 0 || l > completed_l_ || l + 1 < completed_l_) {
        throw std::out_of_range("slab " + std::to_string(l) + " is not resident");
    }
    return RectSlabView(*this, l);
}

namespace {

template <int W>
void combine_rect_row(long long top, const std::uint64_t* a, const std::uint64_t* b,
                      const std::uint64_t* c, const std::uint64_t* d, long long d_shift,
                      std::uint64_t* out, int w) {
    for (long long s = 0; s <= top; ++s) {
        const long long sd = s + d_shift;
        const Operand oa{a + s * w, w};
        const Operand ob{b + s * w, w};
        const Operand oc{c + s * w, w};
        const Operand od{d && sd >= 0 ? d + std::min(sd, top) * w : nullptr, w};
        if constexpr (W > 0) {
            detail::combine<W>(oa, ob, oc, od, out + s * w);
        } else {
            detail::combine_dynamic(w, oa, ob, oc, od, out + s * w);
        }
    }
}

}  // namespace

void RectangularTable::fill_row(int l, int k, long long N) {
    const int cur = l & 1;
    const int prev = cur ^ 1;
    const int w = width_;
    const auto uw = static_cast<std::size_t>(w);
    const long long top = shape_.n_max;
    const std::uint64_t* base = words_.data();
    const std::uint64_t* a = base + cell_index(cur, k - 1, N, 0) * uw;
    const std::uint64_t* b = base + cell_index(prev, k, N, 0) * uw;
    const std::uint64_t* c = base + cell_index(prev, k - 1, N, 0) * uw;
    const long long nd = N - k - l + 1;
    const std::uint64_t* d = nd >= 0 ? base + cell_index(prev, k - 1, nd, 0) * uw : nullptr;
    const long long d_shift = static_cast<long long>(l) - k - 1;
    std::uint64_t* out = words_.data() + cell_index(cur, k, N, 0) * uw;
    switch (w) {
        case 1: combine_rect_row<1>(top, a, b, c, d, d_shift, out, w); break;
        case 2: combine_rect_row<2>(top, a, b, c, d, d_shift, out, w); break;
        case 3: combine_rect_row<3>(top, a, b, c, d, d_shift, out, w); break;
        case 4: combine_rect_row<4>(top, a, b, c, d, d_shift, out, w); break;
        default: combine_rect_row<0>(top, a, b, c, d, d_shift, out, w); break;
    }
}

void RectangularTable::fill(const FillOptions& options,
                            const std::function<void(const RectSlabView&)>& on_slab) {
    if (completed_l_ != 0) {
        throw std::logic_error("rectangular table already filled");
    }
    const auto start = std::chrono::steady_clock::now();
    ThreadPool pool(options.threads);
    if (on_slab) {
        on_slab(RectSlabView(*this, 0));
    }
    for (int l = 1; l <= shape_.l_max; ++l) {
        for (int k = 1; k <= shape_.k_max; ++k) {
            pool.parallel_for(1, shape_.n_max + 1, [&](std::int64_t lo, std::int64_t hi) {
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
            on_slab(RectSlabView(*this, l));
        }
    }
}

}  // namespace gdseq
