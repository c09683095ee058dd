#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cpi/colored.hpp"
#include "cpi/partition.hpp"

namespace cpi {

/* (nu_1..nu_t; d_1..d_t). Its value over a residue system is
 *
 *     sum C_i |nu_i| + sum C_i d_i(d_i-1)/2 + sum A_i d_i.
 *
 * Tuples on the right-hand side of an identity use the T-system and carry
 * value N - m; the offset m lives in the preset. */
struct SolutionTuple {
    std::vector<Partition> nus;
    std::vector<Int> ds;

    Int d_sum() const;

    friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
    friend auto operator<=>(const SolutionTuple&, const SolutionTuple&) = default;
};

Int tuple_value(const ResidueSystem& system, const SolutionTuple& tuple);

/// Contribution of the integer coordinates alone: sum C_i C(d_i,2) + A_i d_i.
Int lattice_value(const ResidueSystem& system, std::span<const Int> ds);

struct ClassSplit {
    Partition lambda; ///< values of the plus-copy parts of the class
    Partition mu;     ///< values of the minus-copy parts
};

std::vector<ClassSplit> split(const ResidueSystem& system, const ColoredPartition& pi);

/* All tuples corresponding to pi with odd d-sum: 2^r of them for a valid pi
 * (none if pi has even length in a system that requires odd length).
 * For each class with A_i = 0 both the bare lambda* and lambda* with an
 * appended 0 are expanded; the raw candidates are ordered by these choices
 * lexicographically (class order, bare first) and then filtered. The
 * 1-based position in the result is the tuple's label. */
std::vector<SolutionTuple> solutions_for(const ResidueSystem& system, const ColoredPartition& pi);

/// 1-based position of tuple among solutions_for(system, partition_for(system, tuple)),
/// computed without expanding the other candidates.
int label_of(const ResidueSystem& system, const SolutionTuple& tuple);

/// solutions_for(system, pi)[label - 1], expanding only that candidate.
/// Throws std::out_of_range for a label outside 1..2^r.
SolutionTuple tuple_for_label(const ResidueSystem& system, const ColoredPartition& pi, int label);

/// Inverse of solutions_for. Throws std::invalid_argument for an even d-sum
/// or a tuple of the wrong shape.
ColoredPartition partition_for(const ResidueSystem& system, const SolutionTuple& tuple);

/// Calls visit(ds, residual) for every d-vector with odd sum and
/// lattice_value(ds) = N - residual, residual >= 0. Vectors come in
/// lexicographic order.
void for_each_d_vector(const ResidueSystem& system, Int N,
                       const std::function<void(std::span<const Int>, Int)>& visit);

/// Number of tuples of value N with odd d-sum; 0 for N < 0.
Int count_solutions(const ResidueSystem& system, Int N);

/// Visits every tuple of value N with odd d-sum. The tuple passed to visit
/// is a reused buffer; catalog must reach N / min C_i.
void for_each_solution(const ResidueSystem& system, Int N, const PartitionCatalog& catalog,
                       const std::function<void(const SolutionTuple&)>& visit);

/// The tuples themselves, ordered by d-vector then partitions. Small N only.
std::vector<SolutionTuple> enumerate_solutions(const ResidueSystem& system, Int N);

/// d_i -> 1 - d_i for a class with A_i = 0.
SolutionTuple flip(const ResidueSystem& system, const SolutionTuple& tuple, int class_index);

/// Coefficients 0..N_max of prod_i P(q^{C_i}), i.e. the number of
/// partition tuples with sum C_i |nu_i| = n.
std::vector<Int> partition_tuple_series(std::span<const Int> moduli, Int N_max);

} // namespace cpi
