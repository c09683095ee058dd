#include "cpi/colored.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cpi {

namespace {

Int mod_floor(Int x, Int c)
{
    const Int r = x % c;
    return r < 0 ? r + c : r;
}

} // namespace

ResidueSystem::ResidueSystem(std::vector<Int> moduli, std::vector<Int> residues)
    : moduli_(std::move(moduli)), residues_(std::move(residues))
{
    require(!moduli_.empty(), "residue system needs t >= 1");
    require(moduli_.size() == residues_.size(), "residue system needs as many residues as moduli");
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        require(moduli_[i] >= 1, "residue system moduli must be >= 1");
        require(residues_[i] >= 0 && 2 * residues_[i] <= moduli_[i],
                "residue system needs 0 <= A_i <= C_i/2");
    }
}

int ResidueSystem::zero_count() const noexcept
{
    return static_cast<int>(std::count(residues_.begin(), residues_.end(), Int{0}));
}

bool canonical_less(const ColoredPart& a, const ColoredPart& b) noexcept
{
    if (a.value != b.value)
        return a.value > b.value;
    if (a.class_index != b.class_index)
        return a.class_index < b.class_index;
    return a.sign < b.sign;
}

bool admits(const ResidueSystem& system, const ColoredPart& part)
{
    if (part.value < 1 || part.class_index < 1 || part.class_index > system.t())
        return false;
    const Int c = system.modulus(part.class_index);
    const Int a = system.residue(part.class_index);
    const Int target = part.sign == Sign::plus ? a : -a;
    return mod_floor(part.value - target, c) == 0;
}

ColoredPartition::ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end(), canonical_less);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i].value >= 1, "colored parts must be positive");
        require(i == 0 || !(parts_[i] == parts_[i - 1]), "colored partition repeats a colored part");
        weight_ = checked_add(weight_, parts_[i].value);
    }
}

bool operator<(const ColoredPartition& a, const ColoredPartition& b)
{
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                                        canonical_less);
}

bool is_valid_for(const ResidueSystem& system, const ColoredPartition& pi)
{
    for (const auto& part : pi.parts())
        if (!admits(system, part))
            return false;
    return !system.parity_required() || is_odd(static_cast<Int>(pi.length()));
}

namespace {

std::vector<Int> iota_range(Int first, Int step, int count)
{
    std::vector<Int> out;
    for (int i = 0; i < count; ++i)
        out.push_back(first + step * i);
    return out;
}

std::vector<IdentityPreset> make_presets()
{
    std::vector<IdentityPreset> out;
    auto add = [&](std::string name, std::vector<Int> C, std::vector<Int> A, std::vector<Int> B, Int m, Int N0,
                   std::optional<Int> k, std::optional<Int> sk) {
        ResidueSystem S(C, std::move(A));
        ResidueSystem T(std::move(C), std::move(B));
        const int p = p_exponent(S, T);
        out.push_back({std::move(name), std::move(S), std::move(T), m, N0, p, k, sk});
    };
    add("mod7", {14, 14, 14, 14}, {1, 3, 5, 7}, {0, 2, 4, 6}, 1, 1, std::nullopt, std::nullopt);
    add("mod3", {6, 6, 6, 6}, {1, 1, 3, 3}, {0, 0, 2, 2}, 1, 1, std::nullopt, std::nullopt);
    add("mod5", {2, 2, 10, 10}, {1, 1, 5, 5}, {0, 0, 0, 0}, 3, 3, 1, 4);
    add("mod11", {2, 22}, {1, 11}, {0, 0}, 3, 3, 1, 2);
    add("mod23", std::vector<Int>(12, 46), iota_range(1, 2, 12), iota_range(0, 2, 12), 3, 3, std::nullopt,
        std::nullopt);
    return out;
}

} // namespace

std::span<const IdentityPreset> all_presets()
{
    static const std::vector<IdentityPreset> presets = make_presets();
    return presets;
}

const IdentityPreset& preset(std::string_view name)
{
    for (const auto& p : all_presets())
        if (p.name == name)
            return p;
    throw std::invalid_argument("cpi: unknown preset '" + std::string(name) + "'");
}

int p_exponent(const ResidueSystem& S, const ResidueSystem& T)
{
    const int zs = std::max(S.zero_count(), 1);
    const int zt = std::max(T.zero_count(), 1);
    return zt - zs;
}

Int multiplicity(const ResidueSystem& system, Int n)
{
    Int count = 0;
    for (int i = 1; i <= system.t(); ++i) {
        const Int c = system.modulus(i);
        const Int a = system.residue(i);
        count += mod_floor(n - a, c) == 0;
        count += mod_floor(n + a, c) == 0;
    }
    return count;
}

namespace {

/// Colors carried by value v, in canonical order.
std::vector<ColoredPart> colors_of(const ResidueSystem& system, Int v)
{
    std::vector<ColoredPart> out;
    for (int i = 1; i <= system.t(); ++i)
        for (Sign s : {Sign::plus, Sign::minus}) {
            ColoredPart part{v, i, s};
            if (admits(system, part))
                out.push_back(part);
        }
    return out;
}

void colored_rec(const std::vector<std::vector<ColoredPart>>& colors, Int v, Int remaining,
                 std::vector<ColoredPart>& buf, bool odd_only,
                 const std::function<void(const ColoredPartition&)>& visit)
{
    if (remaining == 0) {
        if (!odd_only || is_odd(static_cast<Int>(buf.size())))
            visit(ColoredPartition(buf));
        return;
    }
    if (v == 0)
        return;
    v = std::min(v, remaining);
    const auto& here = colors[static_cast<std::size_t>(v)];
    const unsigned subsets = 1u << here.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
        const Int used = std::popcount(mask);
        if (used * v > remaining)
            continue;
        for (std::size_t b = 0; b < here.size(); ++b)
            if (mask & (1u << b))
                buf.push_back(here[b]);
        colored_rec(colors, v - 1, remaining - used * v, buf, odd_only, visit);
        buf.resize(buf.size() - static_cast<std::size_t>(used));
    }
}

Int small_binomial(Int n, Int k)
{
    Int r = 1;
    for (Int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/* ways(v, rem, odd): choices of distinct colored parts with values <= v,
 * summing to rem, whose count has parity odd. The value v carries mult(v)
 * colors, of which any c may be taken in binomial(mult(v), c) ways. */
class DistinctCounter {
public:
    DistinctCounter(const ResidueSystem& system, Int n_max) : n_max_(n_max)
    {
        mult_.resize(static_cast<std::size_t>(n_max) + 1, 0);
        for (Int v = 1; v <= n_max; ++v)
            mult_[static_cast<std::size_t>(v)] = multiplicity(system, v);
        memo_.assign(static_cast<std::size_t>((n_max + 1) * (n_max + 1) * 2), -1);
    }

    Int ways(Int v, Int rem, int odd)
    {
        if (rem == 0)
            return odd == 0 ? 1 : 0;
        if (v == 0)
            return 0;
        v = std::min(v, rem);
        Int& slot = memo_[static_cast<std::size_t>((v * (n_max_ + 1) + rem) * 2 + odd)];
        if (slot >= 0)
            return slot;
        const Int mult = mult_[static_cast<std::size_t>(v)];
        Int total = 0;
        for (Int c = 0; c <= mult && c * v <= rem; ++c) {
            const Int sub = ways(v - 1, rem - c * v, odd ^ static_cast<int>(c & 1));
            total = checked_add(total, checked_mul(small_binomial(mult, c), sub));
        }
        slot = total;
        return total;
    }

private:
    Int n_max_;
    std::vector<Int> mult_;
    std::vector<Int> memo_;
};

} // namespace

void for_each_colored(const ResidueSystem& system, Int N,
                      const std::function<void(const ColoredPartition&)>& visit)
{
    require(N >= 1, "enumerate_colored needs N >= 1");
    std::vector<std::vector<ColoredPart>> colors(static_cast<std::size_t>(N) + 1);
    for (Int v = 1; v <= N; ++v)
        colors[static_cast<std::size_t>(v)] = colors_of(system, v);
    std::vector<ColoredPart> buf;
    colored_rec(colors, N, N, buf, system.parity_required(), visit);
}

std::vector<ColoredPartition> enumerate_colored(const ResidueSystem& system, Int N)
{
    std::vector<ColoredPartition> out;
    for_each_colored(system, N, [&](const ColoredPartition& pi) { out.push_back(pi); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> count_D_table(const ResidueSystem& system, Int N_max)
{
    require(N_max >= 0, "count_D_table needs N_max >= 0");
    DistinctCounter counter(system, N_max);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(N_max) + 1);
    for (Int n = 0; n <= N_max; ++n) {
        const Int odd = counter.ways(n, n, 1);
        out.push_back(system.parity_required() ? odd : checked_add(odd, counter.ways(n, n, 0)));
    }
    return out;
}

Int count_D(const ResidueSystem& system, Int N)
{
    if (N < 0)
        return 0;
    return count_D_table(system, N).back();
}

std::vector<Int> count_D_qseries(const ResidueSystem& system, Int N_max)
{
    require(N_max >= 0, "count_D_qseries needs N_max >= 0");
    const auto size = static_cast<std::size_t>(N_max) + 1;
    std::vector<Int> plus(size, 0);
    std::vector<Int> minus(size, 0);
    plus[0] = minus[0] = 1;
    for (Int n = 1; n <= N_max; ++n) {
        const Int mult = multiplicity(system, n);
        for (Int rep = 0; rep < mult; ++rep)
            for (Int j = N_max; j >= n; --j) {
                const auto ju = static_cast<std::size_t>(j);
                const auto src = static_cast<std::size_t>(j - n);
                plus[ju] = checked_add(plus[ju], plus[src]);
                minus[ju] = checked_sub(minus[ju], minus[src]);
            }
    }
    if (!system.parity_required())
        return plus;
    std::vector<Int> out(size);
    for (std::size_t j = 0; j < size; ++j) {
        const Int diff = checked_sub(plus[j], minus[j]);
        ensure(!is_odd(diff), "odd-length series has an odd numerator");
        out[j] = diff / 2;
    }
    return out;
}

IdentityReport identity_check(const IdentityPreset& preset, Int N_max)
{
    require(N_max >= preset.N0, "identity_check needs N_max >= N0");
    IdentityReport report;
    report.preset = preset.name;
    report.n_min = preset.N0;
    report.n_max = N_max;
    report.p_exponent = preset.p_exponent;

    const Int t_max = std::max<Int>(N_max - preset.m, 0);
    const auto s_enum = count_D_table(preset.S_system, N_max);
    const auto s_series = count_D_qseries(preset.S_system, N_max);
    const auto t_enum = count_D_table(preset.T_system, t_max);
    const auto t_series = count_D_qseries(preset.T_system, t_max);

    const Int left_scale = Int{1} << std::max(-preset.p_exponent, 0);
    const Int right_scale = Int{1} << std::max(preset.p_exponent, 0);

    report.verdict = true;
    report.oracles_agree = true;
    for (Int n = preset.N0; n <= N_max; ++n) {
        IdentityRecord rec;
        rec.N = n;
        const auto ns = static_cast<std::size_t>(n);
        rec.d_S = s_enum[ns];
        const Int nt = n - preset.m;
        rec.d_T = nt < 0 ? 0 : t_enum[static_cast<std::size_t>(nt)];
        const Int d_T_series = nt < 0 ? 0 : t_series[static_cast<std::size_t>(nt)];
        rec.oracles_agree = rec.d_S == s_series[ns] && rec.d_T == d_T_series;
        rec.pass = checked_mul(rec.d_S, left_scale) == checked_mul(rec.d_T, right_scale);
        report.verdict = report.verdict && rec.pass;
        report.oracles_agree = report.oracles_agree && rec.oracles_agree;
        report.records.push_back(rec);
    }
    return report;
}

} // namespace cpi
