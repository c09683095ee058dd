#include "cpi/master.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cpi/warnaar.hpp"

namespace cpi {

Int SolutionTuple::d_sum() const
{
    Int s = 0;
    for (Int d : ds)
        s = checked_add(s, d);
    return s;
}

Int lattice_value(const ResidueSystem& system, std::span<const Int> ds)
{
    require(static_cast<int>(ds.size()) == system.t(), "d-vector length must equal t");
    Int v = 0;
    for (int i = 1; i <= system.t(); ++i) {
        const Int d = ds[static_cast<std::size_t>(i - 1)];
        v = checked_add(v, checked_mul(system.modulus(i), binom2(d)));
        v = checked_add(v, checked_mul(system.residue(i), d));
    }
    return v;
}

Int tuple_value(const ResidueSystem& system, const SolutionTuple& tuple)
{
    require(static_cast<int>(tuple.nus.size()) == system.t(), "tuple must carry t partitions");
    Int v = lattice_value(system, tuple.ds);
    for (int i = 1; i <= system.t(); ++i)
        v = checked_add(v, checked_mul(system.modulus(i), tuple.nus[static_cast<std::size_t>(i - 1)].weight()));
    return v;
}

std::vector<ClassSplit> split(const ResidueSystem& system, const ColoredPartition& pi)
{
    std::vector<std::vector<Int>> plus(static_cast<std::size_t>(system.t()));
    std::vector<std::vector<Int>> minus(static_cast<std::size_t>(system.t()));
    for (const auto& part : pi.parts()) {
        require(admits(system, part), "colored part not admitted by the residue system");
        auto& bucket = part.sign == Sign::plus ? plus : minus;
        bucket[static_cast<std::size_t>(part.class_index - 1)].push_back(part.value);
    }
    std::vector<ClassSplit> out;
    out.reserve(plus.size());
    // Canonical order is value-decreasing, so each bucket is already sorted.
    for (std::size_t i = 0; i < plus.size(); ++i)
        out.push_back({Partition(std::move(plus[i])), Partition(std::move(minus[i]))});
    return out;
}

namespace {

struct ReducedClass {
    std::vector<Int> lambda_star; ///< (lambda - A)/C, no appended zero
    Partition mu_star;            ///< (mu + A)/C
};

std::vector<ReducedClass> reduce(const ResidueSystem& system, const ColoredPartition& pi)
{
    const auto splits = split(system, pi);
    std::vector<ReducedClass> out;
    out.reserve(splits.size());
    for (int i = 1; i <= system.t(); ++i) {
        const Int c = system.modulus(i);
        const Int a = system.residue(i);
        const auto& sp = splits[static_cast<std::size_t>(i - 1)];
        std::vector<Int> lam_star;
        std::vector<Int> mu_star;
        for (Int v : sp.lambda.parts()) {
            ensure((v - a) % c == 0, "plus-copy part off its residue class");
            lam_star.push_back((v - a) / c);
        }
        for (Int v : sp.mu.parts()) {
            ensure((v + a) % c == 0, "minus-copy part off its residue class");
            mu_star.push_back((v + a) / c);
        }
        out.push_back({std::move(lam_star), Partition(std::move(mu_star))});
    }
    return out;
}

std::vector<int> zero_classes_of(const ResidueSystem& system)
{
    std::vector<int> out;
    for (int i = 1; i <= system.t(); ++i)
        if (system.residue(i) == 0)
            out.push_back(i);
    return out;
}

/// Choice bit of zero class number zi (0-based) in a candidate mask; the
/// first zero class is the most significant bit.
unsigned choice_bit(std::size_t mask, std::size_t zi, std::size_t z)
{
    return static_cast<unsigned>((mask >> (z - 1 - zi)) & 1u);
}

SolutionTuple expand(const ResidueSystem& system, const std::vector<ReducedClass>& reduced, std::size_t mask,
                     std::size_t z)
{
    SolutionTuple tuple;
    tuple.nus.reserve(reduced.size());
    tuple.ds.reserve(reduced.size());
    std::size_t zi = 0;
    for (int i = 1; i <= system.t(); ++i) {
        const auto& rc = reduced[static_cast<std::size_t>(i - 1)];
        std::vector<Int> lam = rc.lambda_star;
        if (system.residue(i) == 0 && choice_bit(mask, zi++, z) == 1)
            lam.push_back(0);
        auto pair = warnaar_forward(Partition(std::move(lam)), rc.mu_star);
        tuple.nus.push_back(std::move(pair.nu));
        tuple.ds.push_back(pair.d);
    }
    return tuple;
}

} // namespace

std::vector<SolutionTuple> solutions_for(const ResidueSystem& system, const ColoredPartition& pi)
{
    const auto reduced = reduce(system, pi);
    const std::size_t z = zero_classes_of(system).size();
    std::vector<SolutionTuple> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << z); ++mask) {
        auto tuple = expand(system, reduced, mask, z);
        if (is_odd(tuple.d_sum())) {
            ensure(tuple_value(system, tuple) == pi.weight(), "solution tuple value equals |pi|");
            out.push_back(std::move(tuple));
        }
    }
    return out;
}

int label_of(const ResidueSystem& system, const SolutionTuple& tuple)
{
    require(static_cast<int>(tuple.ds.size()) == system.t() && static_cast<int>(tuple.nus.size()) == system.t(),
            "tuple must carry t partitions and t integers");
    require(is_odd(tuple.d_sum()), "label_of needs an odd d-sum");
    const auto zeros = zero_classes_of(system);
    std::size_t mask = 0;
    Int base = tuple.d_sum();
    for (int cls : zeros) {
        const auto idx = static_cast<std::size_t>(cls - 1);
        const auto triple = warnaar_inverse({tuple.nus[idx], tuple.ds[idx]});
        const bool appended = !triple.alpha.empty() && triple.alpha.parts().back() == 0;
        mask = (mask << 1) | (appended ? 1u : 0u);
        base -= appended ? 1 : 0;
    }
    // Odd candidates before mask, in lexicographic mask order.
    int rank = 0;
    for (std::size_t m = 0; m < mask; ++m)
        rank += is_odd(base + std::popcount(m)) ? 1 : 0;
    return rank + 1;
}

SolutionTuple tuple_for_label(const ResidueSystem& system, const ColoredPartition& pi, int label)
{
    const auto reduced = reduce(system, pi);
    const std::size_t z = zero_classes_of(system).size();
    Int base = 0;
    for (const auto& rc : reduced)
        base += static_cast<Int>(rc.lambda_star.size()) - static_cast<Int>(rc.mu_star.length());
    int seen = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << z); ++mask) {
        if (!is_odd(base + std::popcount(mask)))
            continue;
        if (++seen == label)
            return expand(system, reduced, mask, z);
    }
    throw std::out_of_range("cpi: label outside 1..2^r for this partition");
}

ColoredPartition partition_for(const ResidueSystem& system, const SolutionTuple& tuple)
{
    const int t = system.t();
    require(static_cast<int>(tuple.nus.size()) == t && static_cast<int>(tuple.ds.size()) == t,
            "tuple must carry t partitions and t integers");
    require(is_odd(tuple.d_sum()), "partition_for needs an odd d-sum");

    std::vector<ColoredPart> parts;
    for (int i = 1; i <= t; ++i) {
        const Int c = system.modulus(i);
        const Int a = system.residue(i);
        const auto triple = warnaar_inverse({tuple.nus[static_cast<std::size_t>(i - 1)],
                                             tuple.ds[static_cast<std::size_t>(i - 1)]});
        for (Int x : triple.alpha.parts()) {
            const Int v = checked_add(checked_mul(c, x), a);
            if (v == 0)
                continue; // the appended zero of a zero-residue class
            parts.push_back({v, i, Sign::plus});
        }
        for (Int x : triple.beta.parts()) {
            const Int v = checked_sub(checked_mul(c, x), a);
            ensure(v > 0, "minus-copy part is positive");
            parts.push_back({v, i, Sign::minus});
        }
    }
    return ColoredPartition(std::move(parts));
}

namespace {

struct DRange {
    Int lo;
    Int hi;
};

/// d values whose class contribution C C(d,2) + A d stays within budget.
/// The contribution is nonnegative and grows with |d| on either side of 0.
DRange d_range(Int c, Int a, Int budget)
{
    auto h = [&](Int d) { return c * binom2(d) + a * d; };
    Int hi = 0;
    while (h(hi + 1) <= budget)
        ++hi;
    Int lo = 0;
    while (h(lo - 1) <= budget)
        --lo;
    return {lo, hi};
}

void d_rec(const ResidueSystem& system, int cls, Int budget, Int N, std::vector<Int>& ds, Int parity,
           const std::function<void(std::span<const Int>, Int)>& visit)
{
    if (cls > system.t()) {
        if (parity == 1)
            visit(ds, budget);
        return;
    }
    const Int c = system.modulus(cls);
    const Int a = system.residue(cls);
    const auto range = d_range(c, a, budget);
    const Int bound = 2 + static_cast<Int>(std::ceil(std::sqrt(2.0 * static_cast<double>(N) / static_cast<double>(c))));
    ensure(range.hi <= bound && -range.lo <= bound, "d enumeration bound");
    for (Int d = range.lo; d <= range.hi; ++d) {
        const Int h = c * binom2(d) + a * d;
        if (h > budget)
            continue;
        ds.push_back(d);
        d_rec(system, cls + 1, budget - h, N, ds, parity ^ (d & 1), visit);
        ds.pop_back();
    }
}

} // namespace

void for_each_d_vector(const ResidueSystem& system, Int N,
                       const std::function<void(std::span<const Int>, Int)>& visit)
{
    if (N < 0)
        return;
    std::vector<Int> ds;
    ds.reserve(static_cast<std::size_t>(system.t()));
    d_rec(system, 1, N, N, ds, 0, visit);
}

std::vector<Int> partition_tuple_series(std::span<const Int> moduli, Int N_max)
{
    require(N_max >= 0, "partition_tuple_series needs N_max >= 0");
    std::vector<Int> s(static_cast<std::size_t>(N_max) + 1, 0);
    s[0] = 1;
    for (Int c : moduli)
        for (Int part = c; part <= N_max; part += c)
            for (Int j = part; j <= N_max; ++j)
                s[static_cast<std::size_t>(j)] =
                    checked_add(s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j - part)]);
    return s;
}

Int count_solutions(const ResidueSystem& system, Int N)
{
    if (N < 0)
        return 0;
    const auto series = partition_tuple_series(system.moduli(), N);
    Int total = 0;
    for_each_d_vector(system, N, [&](std::span<const Int>, Int residual) {
        total = checked_add(total, series[static_cast<std::size_t>(residual)]);
    });
    return total;
}

namespace {

void catalog_rec(const ResidueSystem& system, const PartitionCatalog& catalog, std::size_t cls, Int budget,
                 SolutionTuple& tuple, const std::function<void(const SolutionTuple&)>& visit)
{
    const Int c = system.moduli()[cls];
    const bool last = cls + 1 == tuple.nus.size();
    for (Int w = last ? budget / c : 0; w * c <= budget; ++w) {
        if (last && w * c != budget)
            break;
        for (const auto& nu : catalog.of(w)) {
            tuple.nus[cls] = nu;
            if (last)
                visit(tuple);
            else
                catalog_rec(system, catalog, cls + 1, budget - w * c, tuple, visit);
        }
    }
}

} // namespace

void for_each_solution(const ResidueSystem& system, Int N, const PartitionCatalog& catalog,
                       const std::function<void(const SolutionTuple&)>& visit)
{
    SolutionTuple tuple;
    tuple.nus.resize(static_cast<std::size_t>(system.t()));
    for_each_d_vector(system, N, [&](std::span<const Int> ds, Int residual) {
        tuple.ds.assign(ds.begin(), ds.end());
        catalog_rec(system, catalog, 0, residual, tuple, visit);
    });
}

namespace {

void nu_rec(const ResidueSystem& system, int cls, Int budget, std::vector<Partition>& nus,
            const std::vector<Int>& ds, std::vector<SolutionTuple>& out)
{
    if (cls > system.t()) {
        if (budget == 0)
            out.push_back({nus, ds});
        return;
    }
    const Int c = system.modulus(cls);
    for (Int w = 0; w * c <= budget; ++w)
        for (auto& nu : enumerate_partitions(w)) {
            nus.push_back(std::move(nu));
            nu_rec(system, cls + 1, budget - w * c, nus, ds, out);
            nus.pop_back();
        }
}

} // namespace

std::vector<SolutionTuple> enumerate_solutions(const ResidueSystem& system, Int N)
{
    std::vector<SolutionTuple> out;
    for_each_d_vector(system, N, [&](std::span<const Int> ds, Int residual) {
        std::vector<Partition> nus;
        nu_rec(system, 1, residual, nus, std::vector<Int>(ds.begin(), ds.end()), out);
    });
    return out;
}

SolutionTuple flip(const ResidueSystem& system, const SolutionTuple& tuple, int class_index)
{
    require(class_index >= 1 && class_index <= system.t(), "flip: class index out of range");
    require(system.residue(class_index) == 0, "flip needs a class with zero residue");
    require(static_cast<int>(tuple.ds.size()) == system.t(), "d-vector length must equal t");
    SolutionTuple out = tuple;
    auto& d = out.ds[static_cast<std::size_t>(class_index - 1)];
    d = 1 - d;
    return out;
}

} // namespace cpi
