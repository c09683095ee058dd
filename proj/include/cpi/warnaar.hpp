#pragma once

#include "cpi/partition.hpp"

namespace cpi {

struct WarnaarTriple {
    Partition alpha; ///< distinct nonnegative parts (D0)
    Partition beta;  ///< distinct positive parts (D)
    Int d = 0;       ///< length(alpha) - length(beta)

    friend bool operator==(const WarnaarTriple&, const WarnaarTriple&) = default;
};

struct WeightedPair {
    Partition nu; ///< positive parts (P)
    Int d = 0;

    friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
};

/*
 * Weight-preserving bijection (alpha, beta) <-> (nu, d) with
 * |alpha| + |beta| = |nu| + d(d-1)/2 and d = l(alpha) - l(beta).
 *
 * Let a = l(alpha), b = l(beta). Removing the staircases (a-1, ..., 1, 0)
 * from alpha and (b, ..., 2, 1) from beta leaves ordinary partitions A (at
 * most a parts, zeros allowed) and B (at most b parts). Since
 *
 *     C(a,2) + C(b+1,2) - C(a-b,2) = ab,
 *
 * nu is assembled from an a x b rectangle with A_i added to row i and the
 * conjugate of B stacked underneath. The inverse recovers b as the unique
 * value with nu_{b+d} >= b >= nu_{b+d+1} (nu_0 = infinity, nu_i = 0 past
 * the end).
 */
WeightedPair warnaar_forward(const Partition& alpha, const Partition& beta);

WarnaarTriple warnaar_inverse(const WeightedPair& pair);

} // namespace cpi
