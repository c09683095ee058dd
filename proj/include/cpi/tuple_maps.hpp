#pragma once

#include <array>
#include <span>
#include <variant>
#include <vector>

#include "cpi/colored.hpp"
#include "cpi/master.hpp"

namespace cpi {

// ---------------------------------------------------------------------------
// Kim's map (mod 7 and mod 3)
// ---------------------------------------------------------------------------

/* With n = d4, k = d2 + d4, l = d3 + d4, s = (sum d - 1)/2:
 *     e = (2n + 1 - k - l + s, k - s, l - s, -s).
 * Partitions pass through unchanged. Throws on an even d-sum or t != 4. */
std::vector<Int> kim_map(std::span<const Int> ds);
std::vector<Int> kim_inverse(std::span<const Int> es);
SolutionTuple kim_map(const SolutionTuple& tuple);
SolutionTuple kim_inverse(const SolutionTuple& tuple);

// ---------------------------------------------------------------------------
// Half-integer lattice points
// ---------------------------------------------------------------------------

/* How d- and e-tuples of a preset embed in one lattice: weights w_i = C_i/2,
 * and d_i = sign_i * (1/2 - e_i) for e-tuples. */
struct LatticeConfig {
    std::vector<Int> weights;
    std::vector<Int> e_signs;

    static const LatticeConfig& mod5();  ///< w = (1,1,5,5), d_i = 1/2 - e_i
    static const LatticeConfig& mod11(); ///< w = (1,11), d = (1/2 - e_1, e_2 - 1/2)
};

/// mod5 or mod11; throws std::invalid_argument for other presets.
const LatticeConfig& lattice_config(const IdentityPreset& preset);

/* Coordinates stored doubled so every operation stays integral: all even
 * means an integer point (d-side), all odd a half-integer point (e-side). */
struct HalfLatticePoint {
    std::vector<Int> coords2x;
    std::vector<Int> weights;

    bool integral() const;
    /// sum w_i d_i^2. Throws if the point is malformed.
    Int value() const;
    /// Throws std::invalid_argument unless parities agree and sum d is odd.
    void validate() const;

    friend bool operator==(const HalfLatticePoint&, const HalfLatticePoint&) = default;
};

HalfLatticePoint d_to_point(std::span<const Int> ds, const LatticeConfig& config);
HalfLatticePoint e_to_point(std::span<const Int> es, const LatticeConfig& config);
std::vector<Int> point_to_d(const HalfLatticePoint& p);
std::vector<Int> point_to_e(const HalfLatticePoint& p, const LatticeConfig& config);

/// f-tuple with one of |S_k| copy labels (1-based).
struct PentagonalTuple {
    std::vector<Int> f;
    int copy = 1;

    Int f_sum() const;
    friend bool operator==(const PentagonalTuple&, const PentagonalTuple&) = default;
    friend auto operator<=>(const PentagonalTuple&, const PentagonalTuple&) = default;
};

/// sum C_i f_i(3f_i-1)/2 + k for the preset's S-system moduli.
Int pentagonal_value(const IdentityPreset& preset, std::span<const Int> f);

using LatticeImage = std::variant<HalfLatticePoint, PentagonalTuple>;

/* V_1 = (1,1,1,1), V_2 = (1,-1,1,-1), V_3 = (5,5,-1,-1), V_4 = (5,-5,-1,1)
 * under the dot product with weights (1,1,5,5); M_i = |V_i|^2 / 12. */
class ReflectionFrame {
public:
    static const ReflectionFrame& mod5();

    const std::array<std::array<Int, 4>, 4>& vectors() const noexcept { return v_; }
    const std::array<Int, 4>& m() const noexcept { return m_; }
    const std::array<Int, 4>& weights() const noexcept { return w_; }
    Int dot(std::span<const Int> a, std::span<const Int> b) const;

    /// The four admissible residual points z (doubled), in copy order 1..4.
    static const std::array<std::array<Int, 4>, 4>& residuals();

private:
    ReflectionFrame();
    std::array<std::array<Int, 4>, 4> v_;
    std::array<Int, 4> m_;
    std::array<Int, 4> w_;
};

/* If some d.V_i is divisible by 3M_i, reflects in the first such V_i
 * (opposite side, same value). Otherwise writes d.V_i = M_i(6x_i + y_i)
 * with y_i = +-1, z = d - sum (x_i/2) V_i, and returns f = (-x_i y_i)
 * with the copy naming z. */
LatticeImage degree5_map(const HalfLatticePoint& point);
HalfLatticePoint degree5_inverse(const LatticeImage& image);

/* Reflection when d_1 + d_2 = 0 mod 3; otherwise x = round((d_1+d_2)/6),
 * d' = d - (11x/2, x/2), eps = d'_1 + d'_2, y = -2 d'_2 and f = (-eps y, -eps x).
 * Copy 1 is the canonical point ((-f_1 - 11 f_2)/2 + 1, (f_1 - f_2)/2),
 * copy 2 its negation. */
LatticeImage degree11_map(const HalfLatticePoint& point);
HalfLatticePoint degree11_inverse(const LatticeImage& image);

/// degree5_map or degree11_map depending on the preset.
LatticeImage lattice_map(const IdentityPreset& preset, const HalfLatticePoint& point);
HalfLatticePoint lattice_inverse(const IdentityPreset& preset, const LatticeImage& image);

// ---------------------------------------------------------------------------
// U_N and V_N
// ---------------------------------------------------------------------------

struct UVElement {
    enum class Kind { lattice, pentagonal };
    Kind kind = Kind::lattice;
    /// d (in U) or e (in V) for lattice elements, f for pentagonal ones.
    std::vector<Int> coords;
    /// 1..|S_k| for pentagonal elements, 0 for lattice elements.
    int copy = 0;

    friend bool operator==(const UVElement&, const UVElement&) = default;
    friend auto operator<=>(const UVElement&, const UVElement&) = default;
};

/// Value of a U-element (d via the S-system, f via pentagonal_value).
Int u_value(const IdentityPreset& preset, const UVElement& x);
/// Value of a V-element (e via the T-system plus m, f via pentagonal_value).
Int v_value(const IdentityPreset& preset, const UVElement& x);

/// All odd-sum f with sum C_i f_i(3f_i-1)/2 + k = N, lexicographic.
std::vector<std::vector<Int>> pentagonal_tuples(const IdentityPreset& preset, Int N, bool odd_sum);

std::vector<UVElement> build_U(const IdentityPreset& preset, Int N);
std::vector<UVElement> build_V(const IdentityPreset& preset, Int N);

/// The value-preserving bijection U_N -> V_N assembled from the lattice maps.
UVElement uv_bijection(const IdentityPreset& preset, const UVElement& u);
UVElement uv_inverse(const IdentityPreset& preset, const UVElement& v);

} // namespace cpi
