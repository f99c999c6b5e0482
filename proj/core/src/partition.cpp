#include "gdseq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gdseq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
        sum_ += parts_[i];
    }
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) {
            os << ',';
        }
        os << p.parts()[i];
    }
    return os << ')';
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    if (std::any_of(terms_.begin(), terms_.end(), [](int t) { return t < 0; })) {
        throw std::invalid_argument("degree sequence terms must be nonnegative");
    }
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

DegreeSequence DegreeSequence::from_partition(const Partition& p) {
    return DegreeSequence(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (const int part : p.parts()) {
        for (int i = 0; i < part; ++i) {
            ++out[static_cast<std::size_t>(i)];
        }
    }
    return Partition(std::move(out));
}

int durfee_side(const Partition& p) {
    int d = 0;
    while (d < p.length() && p.parts()[d] >= d + 1) {
        ++d;
    }
    return d;
}

std::vector<int> coranks(const Partition& p) {
    const int d = durfee_side(p);
    const Partition c = conjugate(p);
    std::vector<int> r(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
        r[static_cast<std::size_t>(i - 1)] = c.part(i) - p.part(i);
    }
    return r;
}

bool satisfies_s_condition(const Partition& p, long long s) {
    if (s < 0) {
        return false;
    }
    long long acc = s;
    int j = 0;
    for (const int r : coranks(p)) {
        ++j;
        acc += r;
        if (acc < j) {
            return false;
        }
    }
    return true;
}

bool is_graphical(const DegreeSequence& d) {
    const auto t = d.terms();
    const long long n = d.length();
    if (n == 0) {
        return true;
    }
    if (t.front() >= n) {
        return false;
    }
    const long long total = std::accumulate(t.begin(), t.end(), 0LL);
    if (total % 2 != 0) {
        return false;
    }
    // suffix[i] = t[i] + ... + t[n-1]
    std::vector<long long> suffix(static_cast<std::size_t>(n) + 1, 0);
    for (long long i = n - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1] + t[i];
    }
    long long prefix = 0;
    // p = first index (0-based) with t[p] < k; non-decreasing in k.
    long long p = n;
    for (long long k = 1; k <= n; ++k) {
        prefix += t[k - 1];
        while (p > 0 && t[p - 1] < k) {
            --p;
        }
        // Terms after position k: those >= k contribute k, the rest themselves.
        const long long first_small = std::max(p, k);
        const long long rhs = k * (k - 1) + (first_small - k) * k + suffix[first_small];
        if (prefix > rhs) {
            return false;
        }
    }
    return true;
}

bool is_graphical(const Partition& p) { return is_graphical(DegreeSequence::from_partition(p)); }

namespace {

bool visit_rec(std::vector<int>& prefix, long long remaining, int max_part, int slots,
               const std::function<bool(const Partition&)>& visit) {
    if (remaining == 0) {
        return visit(Partition(prefix));
    }
    if (slots == 0) {
        return true;
    }
    const int top = static_cast<int>(std::min<long long>(max_part, remaining));
    for (int part = top; part >= 1; --part) {
        // The remaining slots must be able to absorb what is left.
        if (static_cast<long long>(part) * slots < remaining) {
            break;
        }
        prefix.push_back(part);
        const bool go_on = visit_rec(prefix, remaining - part, part, slots - 1, visit);
        prefix.pop_back();
        if (!go_on) {
            return false;
        }
    }
    return true;
}

}  // namespace

void for_each_partition(long long n, int max_part, int max_parts,
                        const std::function<bool(const Partition&)>& visit) {
    if (n < 0 || max_part < 0 || max_parts < 0) {
        return;
    }
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(max_parts));
    visit_rec(prefix, n, max_part, max_parts, visit);
}

std::vector<Partition> enumerate_partitions(long long n, int max_part, int max_parts) {
    std::vector<Partition> out;
    for_each_partition(n, max_part, max_parts, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace gdseq
