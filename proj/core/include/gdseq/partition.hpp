#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gdseq {

/// An integer partition: positive parts in non-increasing order.
///
/// Immutable after construction. The empty partition (no parts, sum 0) is a
/// valid value.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }
    /// Largest part, 0 for the empty partition.
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    /// 1-based part access; returns 0 past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    long long sum_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::string to_string(const Partition& p);

/// A sequence of vertex degrees, zeros allowed, stored non-increasing.
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Sorts the terms into non-increasing order; throws on negative terms.
    explicit DegreeSequence(std::vector<int> terms);
    DegreeSequence(std::initializer_list<int> terms) : DegreeSequence(std::vector<int>(terms)) {}
    /// A zero-free sequence with the partition's parts as terms.
    static DegreeSequence from_partition(const Partition& p);

    std::span<const int> terms() const { return terms_; }
    int length() const { return static_cast<int>(terms_.size()); }

private:
    std::vector<int> terms_;
};

/// Transpose of the Ferrers diagram: part i is the number of parts >= i.
Partition conjugate(const Partition& p);

/// Side of the Durfee square, max{ j : p_j >= j }.
int durfee_side(const Partition& p);

/// Coranks r_i = p'_i - p_i for i = 1..durfee_side(p).
std::vector<int> coranks(const Partition& p);

/// Membership test for the s-restricted set: false when s < 0, otherwise
/// s + r_1 + ... + r_j >= j must hold for every j up to the Durfee side.
bool satisfies_s_condition(const Partition& p, long long s);

/// Erdos-Gallai test. The empty sequence counts as graphical (empty graph).
bool is_graphical(const DegreeSequence& d);
bool is_graphical(const Partition& p);

/// Visits every partition of n with at most max_parts parts, each at most
/// max_part, in lexicographically descending order. Visiting stops early
/// if the callback returns false.
void for_each_partition(long long n, int max_part, int max_parts,
                        const std::function<bool(const Partition&)>& visit);

/// Materialized form of for_each_partition.
std::vector<Partition> enumerate_partitions(long long n, int max_part, int max_parts);

}  // namespace gdseq
