#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cpi/arith.hpp"

namespace cpi {

/* A weakly decreasing finite sequence of nonnegative integers. Zero parts
 * are legal (D0 needs them) and count towards the length. */
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts is weakly decreasing and >= 0.
    explicit Partition(std::vector<Int> parts);
    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    /// Sorts into decreasing order first.
    static Partition from_unsorted(std::vector<Int> parts);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    Int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    Int operator[](std::size_t i) const { return parts_[i]; }
    /// Largest part, 0 for the empty partition.
    Int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    bool in_P() const noexcept;
    bool in_D() const noexcept;
    bool in_D0() const noexcept;

    /// Conjugate of the positive parts.
    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Int> parts_;
    Int weight_ = 0;
};

/// p(n): partitions of n into positive parts. 0 for n < 0, 1 for n = 0.
/// Throws std::overflow_error once p(n) no longer fits in Int.
Int partition_count(Int n);

constexpr Int generalized_pentagonal(Int f) { return f * (3 * f - 1) / 2; }

/// sum over f of (-1)^f p(n - f(3f-1)/2). Zero for n > 0, one for n = 0.
Int pentagonal_alternating_sum(Int n);

struct PentagonalPair {
    Partition mu;
    Int f = 0;
    friend bool operator==(const PentagonalPair&, const PentagonalPair&) = default;
};

/* Sign-reversing involution on {(mu, f) : mu in P, |mu| + f(3f-1)/2 = n}.
 * Flips the parity of f, has no fixed points for n >= 1. Built from the
 * Bressoud-Zeilberger bijection for Euler's recurrence, with f = -j.
 * Throws std::invalid_argument if n <= 0 or the weight does not match. */
PentagonalPair pentagonal_involution(Int n, const Partition& mu, Int f);

/// Same map, with n taken from the input.
PentagonalPair pentagonal_involution(const PentagonalPair& x);

/// All (mu, f) with |mu| + f(3f-1)/2 = n, ordered by f then mu.
std::vector<PentagonalPair> pentagonal_level_set(Int n);

struct PartitionFilter {
    enum class Kind { all, distinct, distinct_from_multiset };
    Kind kind = Kind::all;
    /// For distinct_from_multiset: each value v may appear at most as many
    /// times as it occurs here.
    std::vector<Int> universe;

    static PartitionFilter all() { return {}; }
    static PartitionFilter distinct() { return {Kind::distinct, {}}; }
    static PartitionFilter from_multiset(std::vector<Int> u)
    {
        return {Kind::distinct_from_multiset, std::move(u)};
    }
};

/// Partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(Int n, const PartitionFilter& filter = {});

/// Calls visit(parts) for every partition of n with parts <= max_part, in
/// lexicographically decreasing order. The span is only valid during the call.
void for_each_partition(Int n, Int max_part, const std::function<void(std::span<const Int>)>& visit);

/* Every partition of every weight up to a bound, built once. Read-only after
 * construction, so sharing between threads is fine. */
class PartitionCatalog {
public:
    explicit PartitionCatalog(Int max_weight);
    Int max_weight() const noexcept { return static_cast<Int>(by_weight_.size()) - 1; }
    /// Empty for n < 0; throws std::out_of_range above max_weight().
    std::span<const Partition> of(Int n) const;

private:
    std::vector<std::vector<Partition>> by_weight_;
};

} // namespace cpi
