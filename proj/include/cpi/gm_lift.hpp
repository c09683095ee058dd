#pragma once

#include <map>
#include <span>
#include <vector>

#include "cpi/colored.hpp"
#include "cpi/master.hpp"
#include "cpi/tuple_maps.hpp"

namespace cpi {

enum class StarSide { U, V };

/* A tuple of t partitions paired with an element of U_{N-x} or V_{N-x},
 * x = sum C_i |partition_i|. Lattice payloads are the S_N / T_N elements;
 * pentagonal payloads make up the overlap sets U*_N - S_N and V*_N - T_N. */
struct StarElement {
    std::vector<Partition> partitions;
    UVElement payload;
    StarSide side = StarSide::U;

    bool in_S() const { return side == StarSide::U && payload.kind == UVElement::Kind::lattice; }
    bool in_T() const { return side == StarSide::V && payload.kind == UVElement::Kind::lattice; }

    friend bool operator==(const StarElement& a, const StarElement& b)
    {
        return a.side == b.side && a.payload == b.payload && a.partitions == b.partitions;
    }
};

Int star_weight(const IdentityPreset& preset, const StarElement& x);

/// S-side tuple (mu; d) as an element of U*_N, and back.
StarElement star_from_S(const SolutionTuple& tuple);
/// T-side tuple (alpha; e) as an element of V*_N, and back.
StarElement star_from_T(const SolutionTuple& tuple);
SolutionTuple tuple_of(const StarElement& x);

/// f*: uv_bijection on the payload (or its inverse from the V side);
/// partitions are untouched.
StarElement f_star(const IdentityPreset& preset, const StarElement& x);

/* g: with n_i = |mu_i| + f_i(3f_i-1)/2, applies pentagonal_involution to
 * (mu_i, f_i) for the smallest i with n_i > 0. Flips the parity of sum f,
 * hence the side; the copy index is kept. Throws std::invalid_argument for
 * lattice payloads or when every n_i is 0 (weight k). */
StarElement g_map(const IdentityPreset& preset, const StarElement& x);
/// g_map in place.
void apply_g(const IdentityPreset& preset, StarElement& x);

/* Follows the path of alternating f* and g edges from an element of S_N (resp. T_N)
 * to its other endpoint in T_N (resp. S_N). When path is non-null it
 * receives every vertex, start included. Throws std::logic_error if the
 * path revisits a vertex. */
StarElement follow_path(const IdentityPreset& preset, const StarElement& start,
                        std::vector<StarElement>* path = nullptr);

/* The same path following with f* memoized per payload (the payload maps
 * see only the d, e or f coordinates) and the walk kept in reused buffers.
 * References returned by the walk functions stay valid until the next walk.
 * Not thread-safe. */
class PathFollower {
public:
    explicit PathFollower(const IdentityPreset& preset);

    const IdentityPreset& preset() const noexcept { return *preset_; }

    const StarElement& walk(const StarElement& start);
    const StarElement& walk_S(const SolutionTuple& s_tuple);
    const StarElement& walk_T(const SolutionTuple& t_tuple);
    /// Walks back from the endpoint of the previous walk.
    const StarElement& walk_back();
    /// Vertices of the last walk, start included.
    std::span<const StarElement> trail() const noexcept { return {trail_.data(), len_}; }

    SolutionTuple forward(const SolutionTuple& s_tuple, std::vector<StarElement>* path = nullptr);
    SolutionTuple backward(const SolutionTuple& t_tuple, std::vector<StarElement>* path = nullptr);

private:
    const StarElement& run();
    void record();
    void step_f();
    void step_g();

    const IdentityPreset* preset_;
    std::map<UVElement, UVElement> to_v_;
    std::map<UVElement, UVElement> to_u_;
    StarElement work_;
    std::vector<StarElement> trail_;
    std::size_t len_ = 0;
};

SolutionTuple lift_forward(const IdentityPreset& preset, const SolutionTuple& s_tuple,
                           std::vector<StarElement>* path = nullptr);
SolutionTuple lift_backward(const IdentityPreset& preset, const SolutionTuple& t_tuple,
                            std::vector<StarElement>* path = nullptr);

struct LiftTable {
    Int N = 0;
    /// (element of S_N, its image in T_N), in S_N enumeration order.
    std::vector<std::pair<SolutionTuple, SolutionTuple>> entries;
    std::size_t longest_path = 0;
};

/// Materializes S_N -> T_N and checks that it is a bijection onto T_N.
/// For mod5/mod11 only; small N (the table holds all of S_N).
LiftTable lift(const IdentityPreset& preset, Int N);

struct LiftStats {
    Int N = 0;
    Int size = 0; ///< |S_N| = |T_N|
    std::size_t longest_path = 0;
};

/* Streaming form of lift: every element of S_N is mapped into T_N and back
 * to itself, and |S_N| = |T_N| is checked by counting, which together make
 * the map a bijection. Nothing is stored. Throws std::logic_error on any
 * violation. */
LiftStats verify_lift(const IdentityPreset& preset, Int N);

struct EndToEndResult {
    ColoredPartition image; ///< T-partition of N - m
    int label = 1;          ///< 1..2^{r_T}, position among solutions_for(T, image)
    SolutionTuple source;   ///< the unique S-side tuple of pi
    SolutionTuple target;   ///< its image on the T side
    std::vector<StarElement> path;
};

/// Colored S-partition of N -> (T-partition of N - m, label). Kim's map for
/// mod7/mod3, the lifted lattice bijection for mod5/mod11.
EndToEndResult end_to_end(const IdentityPreset& preset, const ColoredPartition& pi);
ColoredPartition end_to_end_inverse(const IdentityPreset& preset, const ColoredPartition& tau, int label,
                                    EndToEndResult* trace = nullptr);
/// Same maps, reusing the follower's memo across calls. With keep_path
/// false the result's path is left empty.
EndToEndResult end_to_end(PathFollower& follower, const ColoredPartition& pi, bool keep_path = true);
ColoredPartition end_to_end_inverse(PathFollower& follower, const ColoredPartition& tau, int label,
                                    EndToEndResult* trace = nullptr);

} // namespace cpi
