#include "cpi/tuple_maps.hpp"

#include <algorithm>

namespace cpi {

namespace {

Int span_sum(std::span<const Int> xs)
{
    Int s = 0;
    for (Int x : xs)
        s = checked_add(s, x);
    return s;
}

Int mod6(Int x)
{
    const Int r = x % 6;
    return r < 0 ? r + 6 : r;
}

} // namespace

std::vector<Int> kim_map(std::span<const Int> ds)
{
    require(ds.size() == 4, "kim_map needs four integers");
    const Int sum = span_sum(ds);
    require(is_odd(sum), "kim_map needs an odd d-sum");
    const Int n = ds[3];
    const Int k = ds[1] + ds[3];
    const Int l = ds[2] + ds[3];
    const Int s = (sum - 1) / 2;
    return {2 * n + 1 - k - l + s, k - s, l - s, -s};
}

std::vector<Int> kim_inverse(std::span<const Int> es)
{
    require(es.size() == 4, "kim_inverse needs four integers");
    require(is_odd(span_sum(es)), "kim_inverse needs an odd e-sum");
    const Int s = -es[3];
    const Int k = es[1] + s;
    const Int l = es[2] + s;
    const Int twice_n = es[0] - 1 + k + l - s;
    ensure(!is_odd(twice_n), "kim_inverse recovers an integral n");
    const Int n = twice_n / 2;
    return {2 * s + 1 - k - l + n, k - n, l - n, n};
}

SolutionTuple kim_map(const SolutionTuple& tuple)
{
    return {tuple.nus, kim_map(tuple.ds)};
}

SolutionTuple kim_inverse(const SolutionTuple& tuple)
{
    return {tuple.nus, kim_inverse(tuple.ds)};
}

const LatticeConfig& LatticeConfig::mod5()
{
    static const LatticeConfig config{{1, 1, 5, 5}, {1, 1, 1, 1}};
    return config;
}

const LatticeConfig& LatticeConfig::mod11()
{
    static const LatticeConfig config{{1, 11}, {1, -1}};
    return config;
}

const LatticeConfig& lattice_config(const IdentityPreset& preset)
{
    if (preset.name == "mod5")
        return LatticeConfig::mod5();
    if (preset.name == "mod11")
        return LatticeConfig::mod11();
    throw std::invalid_argument("cpi: no lattice bijection for preset '" + preset.name + "'");
}

bool HalfLatticePoint::integral() const
{
    return coords2x.empty() || !is_odd(coords2x.front());
}

void HalfLatticePoint::validate() const
{
    require(!coords2x.empty() && coords2x.size() == weights.size(), "lattice point dimension mismatch");
    const bool even = !is_odd(coords2x.front());
    for (Int c : coords2x)
        require(is_odd(c) != even, "lattice point mixes integer and half-integer coordinates");
    // sum d odd <=> sum (2d) = 2 mod 4
    const Int twice = span_sum(coords2x);
    require(((twice % 4) + 4) % 4 == 2, "lattice point needs an odd coordinate sum");
}

Int HalfLatticePoint::value() const
{
    validate();
    Int acc = 0;
    for (std::size_t i = 0; i < coords2x.size(); ++i)
        acc = checked_add(acc, checked_mul(weights[i], checked_mul(coords2x[i], coords2x[i])));
    ensure(acc % 4 == 0, "lattice value is integral");
    return acc / 4;
}

HalfLatticePoint d_to_point(std::span<const Int> ds, const LatticeConfig& config)
{
    require(ds.size() == config.weights.size(), "d-tuple dimension mismatch");
    HalfLatticePoint p{{}, config.weights};
    for (Int d : ds)
        p.coords2x.push_back(2 * d);
    p.validate();
    return p;
}

HalfLatticePoint e_to_point(std::span<const Int> es, const LatticeConfig& config)
{
    require(es.size() == config.weights.size(), "e-tuple dimension mismatch");
    HalfLatticePoint p{{}, config.weights};
    for (std::size_t i = 0; i < es.size(); ++i)
        p.coords2x.push_back(config.e_signs[i] * (1 - 2 * es[i]));
    p.validate();
    return p;
}

std::vector<Int> point_to_d(const HalfLatticePoint& p)
{
    p.validate();
    require(p.integral(), "point_to_d needs an integer point");
    std::vector<Int> out;
    for (Int c : p.coords2x)
        out.push_back(c / 2);
    return out;
}

std::vector<Int> point_to_e(const HalfLatticePoint& p, const LatticeConfig& config)
{
    p.validate();
    require(!p.integral(), "point_to_e needs a half-integer point");
    require(p.coords2x.size() == config.e_signs.size(), "e-tuple dimension mismatch");
    std::vector<Int> out;
    for (std::size_t i = 0; i < p.coords2x.size(); ++i)
        out.push_back((1 - config.e_signs[i] * p.coords2x[i]) / 2);
    return out;
}

Int PentagonalTuple::f_sum() const
{
    return span_sum(f);
}

Int pentagonal_value(const IdentityPreset& preset, std::span<const Int> f)
{
    require(preset.k.has_value(), "preset has no pentagonal offset k");
    require(static_cast<int>(f.size()) == preset.S_system.t(), "f-tuple dimension mismatch");
    Int v = *preset.k;
    for (int i = 1; i <= preset.S_system.t(); ++i)
        v = checked_add(v, checked_mul(preset.S_system.modulus(i),
                                       generalized_pentagonal(f[static_cast<std::size_t>(i - 1)])));
    return v;
}

ReflectionFrame::ReflectionFrame()
    : v_{{{1, 1, 1, 1}, {1, -1, 1, -1}, {5, 5, -1, -1}, {5, -5, -1, 1}}}, m_{}, w_{1, 1, 5, 5}
{
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j)
            ensure(dot(v_[i], v_[j]) == 0, "reflection frame orthogonality");
        const Int norm = dot(v_[i], v_[i]);
        ensure(norm % 12 == 0, "reflection frame norm divisible by 12");
        m_[i] = norm / 12;
    }
}

const ReflectionFrame& ReflectionFrame::mod5()
{
    static const ReflectionFrame frame;
    return frame;
}

Int ReflectionFrame::dot(std::span<const Int> a, std::span<const Int> b) const
{
    Int acc = 0;
    for (std::size_t i = 0; i < 4; ++i)
        acc += w_[i] * a[i] * b[i];
    return acc;
}

const std::array<std::array<Int, 4>, 4>& ReflectionFrame::residuals()
{
    static const std::array<std::array<Int, 4>, 4> z{{{2, 0, 0, 0}, {-2, 0, 0, 0}, {0, 2, 0, 0}, {0, -2, 0, 0}}};
    return z;
}

LatticeImage degree5_map(const HalfLatticePoint& point)
{
    point.validate();
    const auto& frame = ReflectionFrame::mod5();
    require(point.weights == std::vector<Int>(frame.weights().begin(), frame.weights().end()),
            "degree5_map needs a mod-5 point");
    const auto& c = point.coords2x;

    std::array<Int, 4> q{}; // d.V_i / M_i
    for (std::size_t i = 0; i < 4; ++i) {
        const Int twice = frame.dot(c, frame.vectors()[i]);
        ensure(!is_odd(twice), "d.V_i is an integer");
        const Int s = twice / 2;
        ensure(s % frame.m()[i] == 0, "d.V_i is a multiple of M_i");
        q[i] = s / frame.m()[i];
        ensure(is_odd(q[i]), "d.V_i / M_i is odd");
    }

    for (std::size_t i = 0; i < 4; ++i)
        if (q[i] % 3 == 0) {
            // r_i(d) = d - (d.V_i / 6M_i) V_i; doubled, the coefficient is q_i/3.
            HalfLatticePoint out = point;
            for (std::size_t j = 0; j < 4; ++j)
                out.coords2x[j] -= (q[i] / 3) * frame.vectors()[i][j];
            return out;
        }

    std::array<Int, 4> z{c[0], c[1], c[2], c[3]};
    PentagonalTuple tuple{std::vector<Int>(4), 0};
    for (std::size_t i = 0; i < 4; ++i) {
        const Int y = mod6(q[i]) == 1 ? 1 : -1;
        ensure(mod6(q[i]) == 1 || mod6(q[i]) == 5, "d.V_i / M_i is +-1 mod 6");
        const Int x = (q[i] - y) / 6;
        for (std::size_t j = 0; j < 4; ++j)
            z[j] -= x * frame.vectors()[i][j];
        tuple.f[i] = -x * y;
    }
    const auto& zs = ReflectionFrame::residuals();
    const auto it = std::find(zs.begin(), zs.end(), z);
    ensure(it != zs.end(), "residual z is one of the four unit points");
    tuple.copy = static_cast<int>(it - zs.begin()) + 1;
    return tuple;
}

HalfLatticePoint degree5_inverse(const LatticeImage& image)
{
    if (const auto* point = std::get_if<HalfLatticePoint>(&image)) {
        auto back = degree5_map(*point);
        const auto* reflected = std::get_if<HalfLatticePoint>(&back);
        require(reflected != nullptr, "degree5_inverse: point is not on the reflection branch");
        return *reflected;
    }
    const auto& tuple = std::get<PentagonalTuple>(image);
    require(tuple.f.size() == 4, "degree5_inverse needs four f-coordinates");
    require(tuple.copy >= 1 && tuple.copy <= 4, "degree5_inverse: copy index must be 1..4");
    const auto& frame = ReflectionFrame::mod5();
    const auto& z = ReflectionFrame::residuals()[static_cast<std::size_t>(tuple.copy - 1)];
    HalfLatticePoint out{std::vector<Int>(z.begin(), z.end()), {1, 1, 5, 5}};
    for (std::size_t i = 0; i < 4; ++i) {
        // z.V_i = y_i M_i, and z is stored doubled.
        const Int y = frame.dot(z, frame.vectors()[i]) / (2 * frame.m()[i]);
        const Int x = -y * tuple.f[i];
        for (std::size_t j = 0; j < 4; ++j)
            out.coords2x[j] += x * frame.vectors()[i][j];
    }
    out.validate();
    return out;
}

namespace {

std::vector<Int> canonical11(std::span<const Int> f)
{
    return {-f[0] - 11 * f[1] + 2, f[0] - f[1]};
}

} // namespace

LatticeImage degree11_map(const HalfLatticePoint& point)
{
    point.validate();
    require(point.weights == LatticeConfig::mod11().weights, "degree11_map needs a mod-11 point");
    const Int c1 = point.coords2x[0];
    const Int c2 = point.coords2x[1];
    const Int sigma = (c1 + c2) / 2; // d_1 + d_2, odd

    if (sigma % 3 == 0) {
        HalfLatticePoint out = point;
        out.coords2x[0] = c1 - 11 * sigma / 3;
        out.coords2x[1] = c2 - sigma / 3;
        return out;
    }
    const Int eps = mod6(sigma) == 1 ? 1 : -1;
    const Int x = (sigma - eps) / 6;
    const Int c1p = c1 - 11 * x;
    const Int c2p = c2 - x;
    ensure(c1p + c2p == 2 * eps, "d'_1 + d'_2 = +-1");
    const Int y = -c2p;
    PentagonalTuple tuple{{-eps * y, -eps * x}, eps == 1 ? 1 : 2};

    auto expect = canonical11(tuple.f);
    if (tuple.copy == 2)
        for (Int& v : expect)
            v = -v;
    ensure(expect == point.coords2x, "degree11 canonical representative");
    return tuple;
}

HalfLatticePoint degree11_inverse(const LatticeImage& image)
{
    if (const auto* point = std::get_if<HalfLatticePoint>(&image)) {
        auto back = degree11_map(*point);
        const auto* reflected = std::get_if<HalfLatticePoint>(&back);
        require(reflected != nullptr, "degree11_inverse: point is not on the reflection branch");
        return *reflected;
    }
    const auto& tuple = std::get<PentagonalTuple>(image);
    require(tuple.f.size() == 2, "degree11_inverse needs two f-coordinates");
    require(tuple.copy == 1 || tuple.copy == 2, "degree11_inverse: copy index must be 1 or 2");
    HalfLatticePoint out{canonical11(tuple.f), LatticeConfig::mod11().weights};
    if (tuple.copy == 2)
        for (Int& v : out.coords2x)
            v = -v;
    out.validate();
    return out;
}

LatticeImage lattice_map(const IdentityPreset& preset, const HalfLatticePoint& point)
{
    if (preset.name == "mod5")
        return degree5_map(point);
    if (preset.name == "mod11")
        return degree11_map(point);
    throw std::invalid_argument("cpi: no lattice bijection for preset '" + preset.name + "'");
}

HalfLatticePoint lattice_inverse(const IdentityPreset& preset, const LatticeImage& image)
{
    if (preset.name == "mod5")
        return degree5_inverse(image);
    if (preset.name == "mod11")
        return degree11_inverse(image);
    throw std::invalid_argument("cpi: no lattice bijection for preset '" + preset.name + "'");
}

Int u_value(const IdentityPreset& preset, const UVElement& x)
{
    if (x.kind == UVElement::Kind::lattice)
        return lattice_value(preset.S_system, x.coords);
    return pentagonal_value(preset, x.coords);
}

Int v_value(const IdentityPreset& preset, const UVElement& x)
{
    if (x.kind == UVElement::Kind::lattice)
        return checked_add(lattice_value(preset.T_system, x.coords), preset.m);
    return pentagonal_value(preset, x.coords);
}

namespace {

void pentagonal_rec(const ResidueSystem& system, int cls, Int budget, Int parity, bool odd_sum,
                    std::vector<Int>& buf, std::vector<std::vector<Int>>& out)
{
    if (cls > system.t()) {
        if (budget == 0 && (parity == 1) == odd_sum)
            out.push_back(buf);
        return;
    }
    const Int c = system.modulus(cls);
    Int lo = 0;
    while (c * generalized_pentagonal(lo - 1) <= budget)
        --lo;
    Int hi = 0;
    while (c * generalized_pentagonal(hi + 1) <= budget)
        ++hi;
    for (Int f = lo; f <= hi; ++f) {
        buf.push_back(f);
        pentagonal_rec(system, cls + 1, budget - c * generalized_pentagonal(f), parity ^ (f & 1), odd_sum, buf, out);
        buf.pop_back();
    }
}

} // namespace

std::vector<std::vector<Int>> pentagonal_tuples(const IdentityPreset& preset, Int N, bool odd_sum)
{
    require(preset.k.has_value(), "preset has no pentagonal offset k");
    std::vector<std::vector<Int>> out;
    if (N < *preset.k)
        return out;
    std::vector<Int> buf;
    pentagonal_rec(preset.S_system, 1, N - *preset.k, 0, odd_sum, buf, out);
    return out;
}

namespace {

std::vector<UVElement> build_side(const IdentityPreset& preset, const ResidueSystem& system, Int lattice_target,
                                  Int N, bool odd_f)
{
    require(preset.S_k_count.has_value(), "preset has no |S_k|");
    std::vector<UVElement> out;
    for_each_d_vector(system, lattice_target, [&](std::span<const Int> ds, Int residual) {
        if (residual == 0)
            out.push_back({UVElement::Kind::lattice, std::vector<Int>(ds.begin(), ds.end()), 0});
    });
    for (const auto& f : pentagonal_tuples(preset, N, odd_f))
        for (int copy = 1; copy <= *preset.S_k_count; ++copy)
            out.push_back({UVElement::Kind::pentagonal, f, copy});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<UVElement> build_U(const IdentityPreset& preset, Int N)
{
    return build_side(preset, preset.S_system, N, N, true);
}

std::vector<UVElement> build_V(const IdentityPreset& preset, Int N)
{
    return build_side(preset, preset.T_system, N - preset.m, N, false);
}

UVElement uv_bijection(const IdentityPreset& preset, const UVElement& u)
{
    const auto& config = lattice_config(preset);
    UVElement out;
    if (u.kind == UVElement::Kind::lattice) {
        const auto image = lattice_map(preset, d_to_point(u.coords, config));
        if (const auto* point = std::get_if<HalfLatticePoint>(&image)) {
            out = {UVElement::Kind::lattice, point_to_e(*point, config), 0};
        } else {
            const auto& tuple = std::get<PentagonalTuple>(image);
            ensure(!is_odd(tuple.f_sum()), "d-side points map to even f-sums");
            out = {UVElement::Kind::pentagonal, tuple.f, tuple.copy};
        }
    } else {
        require(is_odd(span_sum(u.coords)), "U holds only odd-sum f-tuples");
        const auto point = lattice_inverse(preset, PentagonalTuple{u.coords, u.copy});
        ensure(!point.integral(), "odd f-sums come from e-side points");
        out = {UVElement::Kind::lattice, point_to_e(point, config), 0};
    }
    ensure(v_value(preset, out) == u_value(preset, u), "uv_bijection preserves value");
    return out;
}

UVElement uv_inverse(const IdentityPreset& preset, const UVElement& v)
{
    const auto& config = lattice_config(preset);
    UVElement out;
    if (v.kind == UVElement::Kind::lattice) {
        const auto image = lattice_map(preset, e_to_point(v.coords, config));
        if (const auto* point = std::get_if<HalfLatticePoint>(&image)) {
            out = {UVElement::Kind::lattice, point_to_d(*point), 0};
        } else {
            const auto& tuple = std::get<PentagonalTuple>(image);
            ensure(is_odd(tuple.f_sum()), "e-side points map to odd f-sums");
            out = {UVElement::Kind::pentagonal, tuple.f, tuple.copy};
        }
    } else {
        require(!is_odd(span_sum(v.coords)), "V holds only even-sum f-tuples");
        const auto point = lattice_inverse(preset, PentagonalTuple{v.coords, v.copy});
        ensure(point.integral(), "even f-sums come from d-side points");
        out = {UVElement::Kind::lattice, point_to_d(point), 0};
    }
    ensure(u_value(preset, out) == v_value(preset, v), "uv_inverse preserves value");
    return out;
}

} // namespace cpi
