#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpi/arith.hpp"

namespace cpi {

/* The data (t; C_1..C_t; A_1..A_t). Each class i contributes two copies of
 * the positive integers: a plus-copy congruent to A_i and a minus-copy
 * congruent to -A_i modulo C_i. The copies stay distinct colors even when
 * the two residue classes coincide (A_i = 0 or 2A_i = C_i). */
class ResidueSystem {
public:
    /// Throws std::invalid_argument unless t >= 1, C_i >= 1 and 0 <= A_i <= C_i/2.
    ResidueSystem(std::vector<Int> moduli, std::vector<Int> residues);

    int t() const noexcept { return static_cast<int>(moduli_.size()); }
    /// Class indices are 1-based, as in colored parts.
    Int modulus(int class_index) const { return moduli_.at(static_cast<std::size_t>(class_index - 1)); }
    Int residue(int class_index) const { return residues_.at(static_cast<std::size_t>(class_index - 1)); }
    std::span<const Int> moduli() const noexcept { return moduli_; }
    std::span<const Int> residues() const noexcept { return residues_; }

    int zero_count() const noexcept;
    /// r = zero_count - 1, with an empty zero set counted as one.
    int r_value() const noexcept { return zero_count() == 0 ? 0 : zero_count() - 1; }
    /// Odd length is required iff no residue is zero.
    bool parity_required() const noexcept { return zero_count() == 0; }

    friend bool operator==(const ResidueSystem&, const ResidueSystem&) = default;

private:
    std::vector<Int> moduli_;
    std::vector<Int> residues_;
};

enum class Sign : std::uint8_t { plus, minus };

struct ColoredPart {
    Int value = 0;
    int class_index = 1;
    Sign sign = Sign::plus;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Canonical order: decreasing value, then class index, then plus before minus.
bool canonical_less(const ColoredPart& a, const ColoredPart& b) noexcept;

/// True iff the part's value lies in the residue class its color names.
bool admits(const ResidueSystem& system, const ColoredPart& part);

/// A set of colored parts, kept in canonical order.
class ColoredPartition {
public:
    ColoredPartition() = default;
    /// Sorts canonically; throws std::invalid_argument on a repeated colored part
    /// or a nonpositive value.
    explicit ColoredPartition(std::vector<ColoredPart> parts);

    std::span<const ColoredPart> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    Int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const ColoredPartition& a, const ColoredPartition& b)
    {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const ColoredPartition& a, const ColoredPartition& b);

private:
    std::vector<ColoredPart> parts_;
    Int weight_ = 0;
};

/// Valid partition for the system: every color admitted, and odd length if required.
bool is_valid_for(const ResidueSystem& system, const ColoredPartition& pi);

struct IdentityPreset {
    std::string name;
    ResidueSystem S_system;
    ResidueSystem T_system;
    Int m = 0;
    Int N0 = 1;
    int p_exponent = 0;
    std::optional<Int> k;
    std::optional<Int> S_k_count;
};

/// mod7, mod3, mod5, mod11, mod23, in that order.
std::span<const IdentityPreset> all_presets();
/// Throws std::invalid_argument on an unknown name.
const IdentityPreset& preset(std::string_view name);

/// |{B_i = 0}| - |{A_i = 0}|, each empty set counted as one.
int p_exponent(const ResidueSystem& S, const ResidueSystem& T);

/// Number of colors the value n carries in the system's universe.
Int multiplicity(const ResidueSystem& system, Int n);

/// Every colored partition of N into distinct colored parts (odd length iff
/// required), canonically ordered. Intended for small N: the output is
/// materialized.
std::vector<ColoredPartition> enumerate_colored(const ResidueSystem& system, Int N);

/// Streaming form of enumerate_colored, same order before sorting (values
/// descending, then color subsets). The partition passed to visit is temporary.
void for_each_colored(const ResidueSystem& system, Int N,
                      const std::function<void(const ColoredPartition&)>& visit);

/// D(N) by exhaustive recursion over values with memoized subtrees.
Int count_D(const ResidueSystem& system, Int N);
/// count_D for every N in [0, N_max] in one pass.
std::vector<Int> count_D_table(const ResidueSystem& system, Int N_max);

/// Coefficients 0..N_max of prod (1+q^n)^mult(n), or of
/// (prod (1+q^n)^mult(n) - prod (1-q^n)^mult(n)) / 2 when odd length is required.
std::vector<Int> count_D_qseries(const ResidueSystem& system, Int N_max);

struct IdentityRecord {
    Int N = 0;
    Int d_S = 0;
    Int d_T = 0;
    bool pass = false;
    /// Enumeration and q-series agree on both D_S(N) and D_T(N - m).
    bool oracles_agree = false;
};

struct IdentityReport {
    std::string preset;
    Int n_min = 0;
    Int n_max = 0;
    int p_exponent = 0;
    std::vector<IdentityRecord> records;
    /// Conjunction of the per-N pass flags.
    bool verdict = false;
    bool oracles_agree = false;
};

/// Checks D_S(N) = 2^p D_T(N - m) for N0 <= N <= N_max. Never throws on a
/// failing identity; failures are recorded per N.
IdentityReport identity_check(const IdentityPreset& preset, Int N_max);

} // namespace cpi
