#include "cpi/partition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cpi {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 0, "partition parts must be nonnegative");
        require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
        weight_ = checked_add(weight_, parts_[i]);
    }
}

Partition Partition::from_unsorted(std::vector<Int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool Partition::in_P() const noexcept
{
    return parts_.empty() || parts_.back() >= 1;
}

bool Partition::in_D0() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::in_D() const noexcept
{
    return in_P() && in_D0();
}

Partition Partition::conjugate() const
{
    std::vector<Int> out(static_cast<std::size_t>(largest()), 0);
    for (Int part : parts_)
        for (Int c = 0; c < part; ++c)
            ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

namespace {

std::mutex count_mutex;
std::vector<Int> count_table{1};

Int narrow(__int128 x)
{
    if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
        throw std::overflow_error("cpi: integer overflow in partition count");
    return static_cast<Int>(x);
}

} // namespace

Int partition_count(Int n)
{
    if (n < 0)
        return 0;
    std::lock_guard lock(count_mutex);
    // Euler's recurrence: p(n) = sum_{f != 0} (-1)^(f+1) p(n - f(3f-1)/2).
    while (static_cast<Int>(count_table.size()) <= n) {
        const Int m = static_cast<Int>(count_table.size());
        // partial sums run past p(m), so only the total has to fit
        __int128 acc = 0;
        for (Int k = 1;; ++k) {
            const Int g1 = generalized_pentagonal(k);
            if (g1 > m)
                break;
            const Int sign = is_odd(k) ? 1 : -1;
            acc += sign * static_cast<__int128>(count_table[static_cast<std::size_t>(m - g1)]);
            const Int g2 = generalized_pentagonal(-k);
            if (g2 <= m)
                acc += sign * static_cast<__int128>(count_table[static_cast<std::size_t>(m - g2)]);
        }
        count_table.push_back(narrow(acc));
    }
    return count_table[static_cast<std::size_t>(n)];
}

Int pentagonal_alternating_sum(Int n)
{
    if (n < 0)
        return 0;
    __int128 acc = 0;
    // f(3f-1)/2 grows in |f| on both sides, so stop once both directions exceed n.
    for (Int f = 0; generalized_pentagonal(f) <= n; ++f)
        acc += (is_odd(f) ? -1 : 1) * static_cast<__int128>(partition_count(n - generalized_pentagonal(f)));
    for (Int f = -1; generalized_pentagonal(f) <= n; --f)
        acc += (is_odd(f) ? -1 : 1) * static_cast<__int128>(partition_count(n - generalized_pentagonal(f)));
    return narrow(acc);
}

PentagonalPair pentagonal_involution(Int n, const Partition& mu, Int f)
{
    require(n >= 1, "pentagonal_involution needs n >= 1");
    require(mu.in_P(), "pentagonal_involution needs mu in P");
    require(mu.weight() + generalized_pentagonal(f) == n,
            "pentagonal_involution: |mu| + f(3f-1)/2 != n");

    // Work in the index j = -f, whose pentagonal number is j(3j+1)/2.
    const Int j = -f;
    const auto& lam = mu.parts();
    const Int len = static_cast<Int>(lam.size());
    std::vector<Int> out;

    if (len == 0) {
        if (j >= 1) {
            out.push_back(3 * j - 1);
            return {Partition(std::move(out)), -(j - 1)};
        }
        // j = 0 would mean n = 0; j <= -1 here.
        out.assign(static_cast<std::size_t>(-3 * j - 2), 1);
        return {Partition(std::move(out)), -(j + 1)};
    }

    const Int first = lam.front();
    if (len + 3 * j >= first) {
        out.reserve(lam.size() + 1);
        if (len + 3 * j - 1 > 0)
            out.push_back(len + 3 * j - 1);
        for (Int part : lam)
            if (part > 1)
                out.push_back(part - 1);
        return {Partition(std::move(out)), -(j - 1)};
    }
    out.reserve(lam.size() + static_cast<std::size_t>(first));
    for (std::size_t i = 1; i < lam.size(); ++i)
        out.push_back(lam[i] + 1);
    out.insert(out.end(), static_cast<std::size_t>(first - len - 3 * j - 1), 1);
    return {Partition(std::move(out)), -(j + 1)};
}

PentagonalPair pentagonal_involution(const PentagonalPair& x)
{
    return pentagonal_involution(x.mu.weight() + generalized_pentagonal(x.f), x.mu, x.f);
}

std::vector<PentagonalPair> pentagonal_level_set(Int n)
{
    std::vector<Int> fs;
    for (Int f = 0; generalized_pentagonal(f) <= n; ++f)
        fs.push_back(f);
    for (Int f = -1; generalized_pentagonal(f) <= n; --f)
        fs.push_back(f);
    std::sort(fs.begin(), fs.end());
    std::vector<PentagonalPair> out;
    for (Int f : fs)
        for (auto& mu : enumerate_partitions(n - generalized_pentagonal(f)))
            out.push_back({std::move(mu), f});
    return out;
}

namespace {

void partitions_rec(Int remaining, Int max_part, std::vector<Int>& buf,
                    const std::function<void(std::span<const Int>)>& visit)
{
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (Int part = std::min(remaining, max_part); part >= 1; --part) {
        buf.push_back(part);
        partitions_rec(remaining - part, part, buf, visit);
        buf.pop_back();
    }
}

void distinct_rec(Int remaining, std::span<const std::pair<Int, Int>> values, std::vector<Int>& buf,
                  std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(buf);
        return;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto [value, cap] = values[i];
        if (value > remaining)
            continue;
        // Take c copies of value (largest count first keeps lexicographic decrease).
        const Int most = std::min(cap, remaining / value);
        for (Int c = most; c >= 1; --c) {
            buf.insert(buf.end(), static_cast<std::size_t>(c), value);
            distinct_rec(remaining - c * value, values.subspan(i + 1), buf, out);
            buf.resize(buf.size() - static_cast<std::size_t>(c));
        }
    }
}

} // namespace

void for_each_partition(Int n, Int max_part, const std::function<void(std::span<const Int>)>& visit)
{
    if (n < 0)
        return;
    std::vector<Int> buf;
    partitions_rec(n, max_part, buf, visit);
}

std::vector<Partition> enumerate_partitions(Int n, const PartitionFilter& filter)
{
    require(n >= 0, "enumerate_partitions needs n >= 0");
    std::vector<Partition> out;
    if (filter.kind == PartitionFilter::Kind::all) {
        for_each_partition(n, n, [&](std::span<const Int> parts) {
            out.emplace_back(std::vector<Int>(parts.begin(), parts.end()));
        });
        return out;
    }

    // (value, cap) pairs in decreasing value order.
    std::vector<std::pair<Int, Int>> values;
    if (filter.kind == PartitionFilter::Kind::distinct) {
        for (Int v = n; v >= 1; --v)
            values.emplace_back(v, 1);
    } else {
        std::map<Int, Int, std::greater<>> caps;
        for (Int v : filter.universe) {
            require(v >= 1, "multiset universe must hold positive values");
            ++caps[v];
        }
        values.assign(caps.begin(), caps.end());
    }
    std::vector<Int> buf;
    distinct_rec(n, values, buf, out);
    return out;
}

PartitionCatalog::PartitionCatalog(Int max_weight)
{
    require(max_weight >= 0, "PartitionCatalog needs max_weight >= 0");
    by_weight_.resize(static_cast<std::size_t>(max_weight) + 1);
    for (Int n = 0; n <= max_weight; ++n)
        by_weight_[static_cast<std::size_t>(n)] = enumerate_partitions(n);
}

std::span<const Partition> PartitionCatalog::of(Int n) const
{
    if (n < 0)
        return {};
    if (n > max_weight())
        throw std::out_of_range("PartitionCatalog: weight beyond catalog bound");
    return by_weight_[static_cast<std::size_t>(n)];
}

} // namespace cpi
