#include "cpi/warnaar.hpp"

#include <limits>

namespace cpi {

WeightedPair warnaar_forward(const Partition& alpha, const Partition& beta)
{
    require(alpha.in_D0(), "warnaar_forward needs alpha with distinct parts");
    require(beta.in_D(), "warnaar_forward needs beta with distinct positive parts");

    const Int a = static_cast<Int>(alpha.length());
    const Int b = static_cast<Int>(beta.length());

    std::vector<Int> rows;
    rows.reserve(static_cast<std::size_t>(a + b));
    for (Int i = 0; i < a; ++i) {
        const Int row = b + alpha[static_cast<std::size_t>(i)] - (a - 1 - i);
        if (row > 0)
            rows.push_back(row);
    }
    // B_i = beta_i - (b - i), then stack its conjugate.
    std::vector<Int> reduced;
    reduced.reserve(static_cast<std::size_t>(b));
    for (Int i = 0; i < b; ++i)
        reduced.push_back(beta[static_cast<std::size_t>(i)] - (b - i));
    Int width = reduced.empty() ? 0 : reduced.front();
    for (Int c = 0; c < width; ++c) {
        Int height = 0;
        for (Int part : reduced)
            if (part > c)
                ++height;
        rows.push_back(height);
    }

    WeightedPair out{Partition(std::move(rows)), a - b};
    ensure(alpha.weight() + beta.weight() == out.nu.weight() + binom2(out.d), "warnaar weight law");
    return out;
}

WarnaarTriple warnaar_inverse(const WeightedPair& pair)
{
    require(pair.nu.in_P(), "warnaar_inverse needs nu in P");
    const auto& nu = pair.nu.parts();
    const Int d = pair.d;
    // 1-based row access; row 0 is unbounded.
    auto row = [&](Int i) -> Int {
        if (i <= 0)
            return std::numeric_limits<Int>::max();
        return i <= static_cast<Int>(nu.size()) ? nu[static_cast<std::size_t>(i - 1)] : 0;
    };

    Int b = std::max<Int>(0, -d);
    while (row(b + d + 1) > b)
        ++b;
    const Int a = b + d;
    ensure(row(a) >= b, "warnaar_inverse cut");

    std::vector<Int> alpha(static_cast<std::size_t>(a));
    for (Int i = 1; i <= a; ++i)
        alpha[static_cast<std::size_t>(i - 1)] = row(i) - b + (a - i);

    // Rows below the rectangle form the conjugate of B.
    std::vector<Int> below;
    for (Int i = a + 1; i <= static_cast<Int>(nu.size()); ++i)
        below.push_back(row(i));
    const Partition reduced = Partition(std::move(below)).conjugate();
    ensure(static_cast<Int>(reduced.length()) <= b, "warnaar_inverse column height");

    std::vector<Int> beta(static_cast<std::size_t>(b));
    for (Int i = 1; i <= b; ++i) {
        const Int base = i <= static_cast<Int>(reduced.length()) ? reduced[static_cast<std::size_t>(i - 1)] : 0;
        beta[static_cast<std::size_t>(i - 1)] = base + (b - i + 1);
    }
    return {Partition(std::move(alpha)), Partition(std::move(beta)), d};
}

} // namespace cpi
