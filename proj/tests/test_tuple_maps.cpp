#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cpi/tuple_maps.hpp"

using namespace cpi;

namespace {

// All doubled points (integral or half-integral, odd coordinate sum) of
// weighted norm <= bound, scanned from a box.
std::vector<HalfLatticePoint> points_up_to(const std::vector<Int>& w, Int bound)
{
    std::vector<HalfLatticePoint> out;
    const std::size_t t = w.size();
    std::vector<Int> lim(t);
    for (std::size_t i = 0; i < t; ++i) {
        lim[i] = 0;
        while (w[i] * (lim[i] + 1) * (lim[i] + 1) <= 4 * bound)
            ++lim[i];
    }
    std::vector<Int> c(t);
    for (int parity = 0; parity < 2; ++parity) {
        for (std::size_t i = 0; i < t; ++i)
            c[i] = -lim[i];
        for (;;) {
            bool ok = true;
            Int norm = 0, sum = 0;
            for (std::size_t i = 0; i < t; ++i) {
                ok = ok && ((c[i] % 2 + 2) % 2 == parity);
                norm += w[i] * c[i] * c[i];
                sum += c[i];
            }
            // sum of the actual coordinates is sum/2, which must be odd
            if (ok && norm <= 4 * bound && sum % 2 == 0 && ((sum / 2) % 2 + 2) % 2 == 1)
                out.push_back({c, w});
            std::size_t k = 0;
            while (k < t && c[k] == lim[k])
                c[k] = -lim[k], ++k;
            if (k == t)
                break;
            ++c[k];
        }
    }
    return out;
}

Int pent(const std::vector<Int>& moduli, const std::vector<Int>& f, Int k)
{
    Int v = k;
    for (std::size_t i = 0; i < f.size(); ++i)
        v += moduli[i] * f[i] * (3 * f[i] - 1) / 2;
    return v;
}

void check_lattice_map(const IdentityPreset& p, Int bound, const std::vector<Int>& moduli)
{
    const auto& cfg = lattice_config(p);
    std::set<std::pair<int, std::vector<Int>>> images;
    for (const auto& pt : points_up_to(cfg.weights, bound)) {
        const auto image = lattice_map(p, pt);
        if (const auto* q = std::get_if<HalfLatticePoint>(&image)) {
            CHECK(q->integral() != pt.integral());
            CHECK(q->value() == pt.value());
            const auto back = lattice_map(p, *q);
            REQUIRE(std::holds_alternative<HalfLatticePoint>(back));
            CHECK(std::get<HalfLatticePoint>(back) == pt);
            CHECK(images.insert({0, q->coords2x}).second);
        } else {
            const auto& f = std::get<PentagonalTuple>(image);
            CHECK(pent(moduli, f.f, 1) == pt.value());
            CHECK(is_odd(f.f_sum()) != pt.integral());
            CHECK(f.copy >= 1);
            CHECK(f.copy <= *p.S_k_count);
            auto key = f.f;
            key.push_back(f.copy);
            CHECK(images.insert({1, key}).second);
        }
        CHECK(lattice_inverse(p, image) == pt);
    }
}

} // namespace

TEST_SUITE("tuple_maps")
{
    TEST_CASE("Kim's map on the worked example")
    {
        const std::vector<Int> a{0, 1, 1, 1}, b{0, 1, 1, -1}, c{-1, 0, 0, 0}, d{1, 0, 0, 0};
        CHECK(kim_map(a) == b);
        CHECK(kim_map(b) == c);
        CHECK(kim_map(d) == d);
        CHECK(kim_inverse(c) == b);
        CHECK(kim_inverse(d) == d);
        const SolutionTuple x{{{1}, {}, {}, {}}, {1, 0, 0, 0}};
        CHECK(kim_map(x) == x);
        CHECK_THROWS_AS(kim_map(std::vector<Int>{0, 0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(kim_map(std::vector<Int>{1, 0}), std::invalid_argument);
    }

    TEST_CASE("Kim's map is a value-shifting bijection")
    {
        for (const auto* name : {"mod7", "mod3"}) {
            const auto& p = preset(name);
            std::vector<Int> d(4);
            for (d[0] = -3; d[0] <= 3; ++d[0])
                for (d[1] = -3; d[1] <= 3; ++d[1])
                    for (d[2] = -3; d[2] <= 3; ++d[2])
                        for (d[3] = -3; d[3] <= 3; ++d[3]) {
                            if (!is_odd(d[0] + d[1] + d[2] + d[3]))
                                continue;
                            const auto e = kim_map(d);
                            CHECK(is_odd(e[0] + e[1] + e[2] + e[3]));
                            CHECK(lattice_value(p.T_system, e) + p.m == lattice_value(p.S_system, d));
                            CHECK(kim_inverse(e) == d);
                            CHECK(kim_map(kim_inverse(d)) == d);
                        }
        }
    }

    TEST_CASE("embeddings")
    {
        const auto& c5 = LatticeConfig::mod5();
        const auto p = d_to_point(std::vector<Int>{1, 0, 0, 0}, c5);
        CHECK(p.value() == 1);
        CHECK(p.integral());
        const auto q = e_to_point(std::vector<Int>{-2, 1, 1, 1}, c5);
        CHECK(q.coords2x == std::vector<Int>{5, -1, -1, -1});
        CHECK(q.value() == 9);
        const auto r = e_to_point(std::vector<Int>{1, 0}, LatticeConfig::mod11());
        CHECK(r.coords2x == std::vector<Int>{-1, -1});
        CHECK(r.value() == 3);
        CHECK_THROWS_AS(e_to_point(std::vector<Int>{0, 0}, LatticeConfig::mod11()), std::invalid_argument);
        CHECK(point_to_e(q, c5) == std::vector<Int>{-2, 1, 1, 1});
        CHECK(point_to_d(p) == std::vector<Int>{1, 0, 0, 0});
        CHECK_THROWS_AS(point_to_d(q), std::invalid_argument);
        // values agree with the quadratic forms of both sides
        for (const auto* name : {"mod5", "mod11"}) {
            const auto& pr = preset(name);
            const auto& cfg = lattice_config(pr);
            for (const auto& pt : points_up_to(cfg.weights, 40)) {
                if (pt.integral())
                    CHECK(lattice_value(pr.S_system, point_to_d(pt)) == pt.value());
                else
                    CHECK(lattice_value(pr.T_system, point_to_e(pt, cfg)) + pr.m == pt.value());
            }
        }
        CHECK_THROWS_AS(lattice_config(preset("mod7")), std::invalid_argument);
    }

    TEST_CASE("reflection frame")
    {
        const auto& fr = ReflectionFrame::mod5();
        CHECK(fr.m() == std::array<Int, 4>{1, 1, 5, 5});
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK((fr.dot(fr.vectors()[i], fr.vectors()[j]) == 0) == (i != j));
    }

    TEST_CASE("degree 5 examples")
    {
        const auto& c5 = LatticeConfig::mod5();
        const auto a = degree5_map(d_to_point(std::vector<Int>{1, 0, 0, 0}, c5));
        REQUIRE(std::holds_alternative<PentagonalTuple>(a));
        CHECK(std::get<PentagonalTuple>(a) == PentagonalTuple{{0, 0, 0, 0}, 1});

        const auto b = degree5_map(d_to_point(std::vector<Int>{3, 0, 0, 0}, c5));
        REQUIRE(std::holds_alternative<HalfLatticePoint>(b));
        CHECK(std::get<HalfLatticePoint>(b).coords2x == std::vector<Int>{5, -1, -1, -1});
        CHECK(std::get<HalfLatticePoint>(b).value() == 9);
        CHECK(degree5_inverse(b) == d_to_point(std::vector<Int>{3, 0, 0, 0}, c5));

        const auto c = degree5_map(d_to_point(std::vector<Int>{1, 1, 1, 0}, c5));
        REQUIRE(std::holds_alternative<PentagonalTuple>(c));
        CHECK(std::get<PentagonalTuple>(c) == PentagonalTuple{{-1, 1, 0, 0}, 3});

        CHECK(degree5_inverse(PentagonalTuple{{0, 0, 0, 0}, 1}) == d_to_point(std::vector<Int>{1, 0, 0, 0}, c5));
        CHECK_THROWS_AS(degree5_inverse(PentagonalTuple{{0, 0, 0, 0}, 5}), std::invalid_argument);
    }

    TEST_CASE("degree 11 examples")
    {
        const auto& c11 = LatticeConfig::mod11();
        CHECK(std::get<PentagonalTuple>(degree11_map(d_to_point(std::vector<Int>{1, 0}, c11))) ==
              PentagonalTuple{{0, 0}, 1});
        CHECK(std::get<PentagonalTuple>(degree11_map(d_to_point(std::vector<Int>{-1, 0}, c11))) ==
              PentagonalTuple{{0, 0}, 2});
        const auto r = degree11_map(d_to_point(std::vector<Int>{1, 2}, c11));
        REQUIRE(std::holds_alternative<HalfLatticePoint>(r));
        CHECK(std::get<HalfLatticePoint>(r).coords2x == std::vector<Int>{-9, 3});
        CHECK(std::get<HalfLatticePoint>(r).value() == 45);
        CHECK(degree11_inverse(PentagonalTuple{{0, 0}, 1}) == d_to_point(std::vector<Int>{1, 0}, c11));
        CHECK(degree11_inverse(PentagonalTuple{{0, 0}, 2}) == d_to_point(std::vector<Int>{-1, 0}, c11));
    }

    TEST_CASE("lattice maps are bijective onto points and pentagonal copies")
    {
        check_lattice_map(preset("mod5"), 60, {2, 2, 10, 10});
        check_lattice_map(preset("mod11"), 100, {2, 22});
    }

    TEST_CASE("U and V")
    {
        const auto& p11 = preset("mod11");
        const auto u1 = build_U(p11, 1);
        CHECK(u1 == std::vector<UVElement>{{UVElement::Kind::lattice, {-1, 0}, 0},
                                           {UVElement::Kind::lattice, {1, 0}, 0}});
        const auto v1 = build_V(p11, 1);
        CHECK(v1 == std::vector<UVElement>{{UVElement::Kind::pentagonal, {0, 0}, 1},
                                           {UVElement::Kind::pentagonal, {0, 0}, 2}});
        CHECK(uv_bijection(p11, {UVElement::Kind::lattice, {1, 0}, 0}) ==
              UVElement{UVElement::Kind::pentagonal, {0, 0}, 1});

        const auto& p5 = preset("mod5");
        CHECK(build_U(p5, 1).size() == 4);
        CHECK(build_V(p5, 1).size() == 4);
        CHECK(build_U(p5, 2).empty());
        CHECK(build_V(p5, 2).empty());
        CHECK(uv_bijection(p5, {UVElement::Kind::lattice, {1, 1, 1, 0}, 0}) ==
              UVElement{UVElement::Kind::pentagonal, {-1, 1, 0, 0}, 3});
    }

    TEST_CASE("U and V against box enumeration, and the assembled bijection")
    {
        for (const auto* name : {"mod5", "mod11"}) {
            const auto& p = preset(name);
            const std::vector<Int> moduli(p.S_system.moduli().begin(), p.S_system.moduli().end());
            const auto& cfg = lattice_config(p);
            std::map<Int, std::multiset<std::vector<Int>>> ds, es;
            for (const auto& pt : points_up_to(cfg.weights, 50)) {
                if (pt.integral())
                    ds[pt.value()].insert(point_to_d(pt));
                else
                    es[pt.value()].insert(point_to_e(pt, cfg));
            }
            for (Int n = 0; n <= 50; ++n) {
                const auto U = build_U(p, n);
                const auto V = build_V(p, n);
                CHECK(U.size() == V.size());
                std::size_t lu = 0, lv = 0, pu = 0, pv = 0;
                for (const auto& x : U) {
                    if (x.kind == UVElement::Kind::lattice) {
                        ++lu;
                        CHECK(ds[n].count(x.coords) == 1);
                    } else {
                        ++pu;
                        CHECK(is_odd(std::accumulate(x.coords.begin(), x.coords.end(), Int{0})));
                    }
                    CHECK(u_value(p, x) == n);
                }
                for (const auto& x : V) {
                    lv += x.kind == UVElement::Kind::lattice;
                    pv += x.kind == UVElement::Kind::pentagonal;
                    CHECK(v_value(p, x) == n);
                }
                CHECK(lu == ds[n].size());
                CHECK(lv == es[n].size());
                // pentagonal copies from a direct scan
                std::size_t odd = 0, even = 0;
                std::vector<Int> f(moduli.size(), -6);
                for (;;) {
                    if (pent(moduli, f, 1) == n)
                        (is_odd(std::accumulate(f.begin(), f.end(), Int{0})) ? odd : even) += *p.S_k_count;
                    std::size_t k = 0;
                    while (k < f.size() && f[k] == 6)
                        f[k++] = -6;
                    if (k == f.size())
                        break;
                    ++f[k];
                }
                CHECK(pu == odd);
                CHECK(pv == even);

                std::set<UVElement> hit;
                for (const auto& x : U) {
                    const auto y = uv_bijection(p, x);
                    CHECK(std::binary_search(V.begin(), V.end(), y));
                    CHECK(hit.insert(y).second);
                    CHECK(uv_inverse(p, y) == x);
                }
            }
        }
    }
}
