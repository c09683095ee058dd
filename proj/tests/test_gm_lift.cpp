#include <doctest.h>

#include <set>

#include "cpi/gm_lift.hpp"
#include "cpi/text.hpp"

using namespace cpi;

namespace {

// Every star element of weight N with a pentagonal payload, on both sides.
std::vector<StarElement> pentagonal_stars(const IdentityPreset& p, Int N)
{
    std::vector<StarElement> out;
    const auto& moduli = p.S_system.moduli();
    const int t = p.S_system.t();
    for (int odd = 0; odd < 2; ++odd) {
        // partition weights w_i with sum C_i w_i = x, payload value N - x
        std::vector<Int> w(static_cast<std::size_t>(t), 0);
        std::function<void(int, Int)> rec = [&](int i, Int budget) {
            if (i == t) {
                for (const auto& f : pentagonal_tuples(p, budget, odd == 1)) {
                    std::vector<std::vector<Partition>> choices(1);
                    for (int k = 0; k < t; ++k) {
                        std::vector<std::vector<Partition>> next;
                        for (const auto& c : choices)
                            for (auto& mu : enumerate_partitions(w[static_cast<std::size_t>(k)])) {
                                auto e = c;
                                e.push_back(mu);
                                next.push_back(std::move(e));
                            }
                        choices = std::move(next);
                    }
                    for (const auto& parts : choices)
                        for (int copy = 1; copy <= *p.S_k_count; ++copy)
                            out.push_back({parts, {UVElement::Kind::pentagonal, f, copy},
                                           odd == 1 ? StarSide::U : StarSide::V});
                }
                return;
            }
            for (Int x = 0; x * moduli[static_cast<std::size_t>(i)] <= budget; ++x) {
                w[static_cast<std::size_t>(i)] = x;
                rec(i + 1, budget - x * moduli[static_cast<std::size_t>(i)]);
            }
        };
        rec(0, N);
    }
    return out;
}

} // namespace

TEST_SUITE("gm_lift")
{
    TEST_CASE("g on the smallest mod11 example")
    {
        const auto& p = preset("mod11");
        const StarElement x{{Partition{1}, Partition{}}, {UVElement::Kind::pentagonal, {0, 0}, 1}, StarSide::V};
        CHECK(star_weight(p, x) == 3);
        const auto y = g_map(p, x);
        CHECK(y == StarElement{{Partition{}, Partition{}}, {UVElement::Kind::pentagonal, {1, 0}, 1}, StarSide::U});
        CHECK(star_weight(p, y) == 3);
        CHECK(g_map(p, y) == x);
        const StarElement k{{Partition{}, Partition{}}, {UVElement::Kind::pentagonal, {0, 0}, 2}, StarSide::V};
        CHECK_THROWS_AS(g_map(p, k), std::invalid_argument);
        CHECK_THROWS_AS(g_map(p, star_from_S({{Partition{}, Partition{}}, {1, 0}})), std::invalid_argument);
    }

    TEST_CASE("g is a side-flipping, weight-preserving involution")
    {
        for (const auto* name : {"mod5", "mod11"}) {
            const auto& p = preset(name);
            for (Int N = 2; N <= 14; ++N) {
                const auto stars = pentagonal_stars(p, N);
                std::set<std::string> images;
                for (const auto& x : stars) {
                    const auto y = g_map(p, x);
                    CHECK(y.side != x.side);
                    CHECK(y.payload.copy == x.payload.copy);
                    CHECK(star_weight(p, y) == N);
                    CHECK(g_map(p, y) == x);
                    CHECK(images.insert(format_star(y)).second);
                }
            }
        }
    }

    TEST_CASE("lift tables")
    {
        const auto t5 = lift(preset("mod5"), 3);
        CHECK(t5.entries.size() == 8);
        const auto t11 = lift(preset("mod11"), 3);
        CHECK(t11.entries.size() == 2);
        for (const auto* name : {"mod5", "mod11"}) {
            const auto& p = preset(name);
            for (Int N = p.N0; N <= 21; ++N) {
                const auto table = lift(p, N);
                const auto stats = verify_lift(p, N);
                CHECK(static_cast<Int>(table.entries.size()) == stats.size);
                CHECK(stats.size == count_solutions(p.S_system, N));
                CHECK(stats.size == count_solutions(p.T_system, N - p.m));
                for (const auto& [s, t] : table.entries) {
                    CHECK(lift_backward(p, t) == s);
                    std::vector<StarElement> path;
                    CHECK(lift_forward(p, s, &path) == t);
                    REQUIRE(path.size() >= 2);
                    CHECK(path.size() % 2 == 0);
                    CHECK(path.front().in_S());
                    CHECK(path.back().in_T());
                    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                        CHECK_FALSE(path[i].in_S());
                        CHECK_FALSE(path[i].in_T());
                    }
                    for (const auto& v : path)
                        CHECK(star_weight(p, v) == N);
                }
            }
        }
        CHECK_THROWS_AS(lift(preset("mod7"), 5), std::invalid_argument);
        CHECK_THROWS_AS(lift(preset("mod5"), 2), std::invalid_argument);
    }

    TEST_CASE("follow_path refuses a start outside S and T")
    {
        const auto& p = preset("mod11");
        const StarElement x{{Partition{1}, Partition{}}, {UVElement::Kind::pentagonal, {0, 0}, 1}, StarSide::V};
        CHECK_THROWS_AS(follow_path(p, x), std::invalid_argument);
    }

    TEST_CASE("end_to_end spot values")
    {
        const auto& p7 = preset("mod7");
        const auto r = end_to_end(p7, parse_colored("15@1+"));
        CHECK(r.image == parse_colored("14@1+"));
        CHECK(r.label == 1);
        CHECK(r.source == SolutionTuple{{{1}, {}, {}, {}}, {1, 0, 0, 0}});
        CHECK(r.target == r.source);

        const auto& p5 = preset("mod5");
        std::set<int> labels;
        for (const auto& pi : enumerate_colored(p5.S_system, 3)) {
            const auto e = end_to_end(p5, pi);
            CHECK(e.image.empty());
            labels.insert(e.label);
        }
        CHECK(labels == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});
        CHECK_THROWS_AS(end_to_end(preset("mod23"), parse_colored("1@1+,1@1-,1@2+")), std::invalid_argument);
        CHECK_THROWS_AS(end_to_end(p5, parse_colored("3@3+")), std::invalid_argument);
    }

    TEST_CASE("end_to_end is a bijection onto T-partitions times labels")
    {
        for (const auto* name : {"mod7", "mod3", "mod5", "mod11"}) {
            const auto& p = preset(name);
            for (Int N = p.N0; N <= 20; ++N) {
                std::set<std::pair<std::string, int>> seen;
                for (const auto& pi : enumerate_colored(p.S_system, N)) {
                    const auto e = end_to_end(p, pi);
                    CHECK(e.image.weight() == N - p.m);
                    CHECK(is_valid_for(p.T_system, e.image));
                    CHECK(e.label >= 1);
                    CHECK(e.label <= (1 << p.T_system.r_value()));
                    CHECK(seen.insert({format_colored(e.image), e.label}).second);
                    EndToEndResult trace;
                    CHECK(end_to_end_inverse(p, e.image, e.label, &trace) == pi);
                    CHECK(trace.source == e.source);
                }
                const Int expected = count_D(p.T_system, N - p.m) << p.T_system.r_value();
                CHECK(static_cast<Int>(seen.size()) == expected);
            }
        }
    }
}
