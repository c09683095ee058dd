#include <doctest.h>

#include <algorithm>
#include <set>

#include "cpi/master.hpp"
#include "cpi/text.hpp"
#include "oracles.hpp"

using namespace cpi;

namespace {

SolutionTuple tup(std::vector<Partition> nus, std::vector<Int> ds) { return {std::move(nus), std::move(ds)}; }

// enumerate_colored, extended to n = 0 by the empty partition when it is valid.
std::vector<ColoredPartition> colored_of(const ResidueSystem& s, Int n)
{
    if (n > 0)
        return enumerate_colored(s, n);
    if (is_valid_for(s, ColoredPartition{}))
        return {ColoredPartition{}};
    return {};
}

} // namespace

TEST_SUITE("master")
{
    TEST_CASE("values")
    {
        const auto& s7 = preset("mod7").S_system;
        CHECK(tuple_value(s7, tup({{1}, {}, {}, {}}, {1, 0, 0, 0})) == 15);
        CHECK(tuple_value(s7, tup({{}, {}, {}, {}}, {0, 1, 1, 1})) == 15);
        CHECK(tuple_value(s7, tup({{}, {}, {}, {}}, {0, 1, 1, -1})) == 15);
        const std::vector<Int> d{0, 1, 1, -1};
        CHECK(lattice_value(s7, d) == 15);
        CHECK_THROWS_AS(lattice_value(s7, std::vector<Int>{1}), std::invalid_argument);
    }

    TEST_CASE("split")
    {
        const auto& s7 = preset("mod7").S_system;
        const auto sp = split(s7, parse_colored("7@4+,7@4-,1@1+"));
        CHECK(sp[0].lambda == Partition{1});
        CHECK(sp[0].mu == Partition{});
        CHECK(sp[3].lambda == Partition{7});
        CHECK(sp[3].mu == Partition{7});
        CHECK(sp[1].lambda.empty());
        for (const auto& c : split(s7, ColoredPartition{})) {
            CHECK(c.lambda.empty());
            CHECK(c.mu.empty());
        }
        const auto sp3 = split(preset("mod3").S_system, parse_colored("3@3+,3@3-"));
        CHECK(sp3[2].lambda == Partition{3});
        CHECK(sp3[2].mu == Partition{3});
        CHECK_THROWS_AS(split(s7, parse_colored("2@1+")), std::invalid_argument);
    }

    TEST_CASE("solutions_for and partition_for on the mod7 examples")
    {
        const auto& s7 = preset("mod7").S_system;
        CHECK(solutions_for(s7, parse_colored("15@1+")) ==
              std::vector<SolutionTuple>{tup({{1}, {}, {}, {}}, {1, 0, 0, 0})});
        CHECK(solutions_for(s7, parse_colored("7@4+,7@4-,1@1+")) ==
              std::vector<SolutionTuple>{tup({{}, {}, {}, {1}}, {1, 0, 0, 0})});
        CHECK(partition_for(s7, tup({{1}, {}, {}, {}}, {1, 0, 0, 0})) == parse_colored("15@1+"));
        CHECK(partition_for(s7, tup({{}, {}, {}, {}}, {0, 1, 1, 1})) == parse_colored("7@4+,5@3+,3@2+"));
        CHECK_THROWS_AS(partition_for(s7, tup({{}, {}, {}, {}}, {0, 1, 1, 0})), std::invalid_argument);
        // an even-length partition has no odd-sum tuple when no residue is zero
        CHECK(solutions_for(s7, parse_colored("5@3+,3@2+")).empty());
    }

    TEST_CASE("every mod3 T-partition has two tuples")
    {
        const auto& t3 = preset("mod3").T_system;
        for (Int n = 0; n <= 14; ++n)
            for (const auto& pi : colored_of(t3, n)) {
                const auto sols = solutions_for(t3, pi);
                REQUIRE(sols.size() == 2);
                for (std::size_t k = 0; k < sols.size(); ++k) {
                    CHECK(partition_for(t3, sols[k]) == pi);
                    CHECK(label_of(t3, sols[k]) == static_cast<int>(k) + 1);
                    CHECK(tuple_for_label(t3, pi, static_cast<int>(k) + 1) == sols[k]);
                }
                CHECK_THROWS_AS(tuple_for_label(t3, pi, 3), std::out_of_range);
                CHECK_THROWS_AS(tuple_for_label(t3, pi, 0), std::out_of_range);
            }
    }

    TEST_CASE("labels on every preset system")
    {
        for (const auto& p : all_presets())
            for (const auto* s : {&p.S_system, &p.T_system})
                for (Int n = 0; n <= 16; ++n)
                    for (const auto& pi : colored_of(*s, n)) {
                        const auto sols = solutions_for(*s, pi);
                        CHECK(sols.size() == (std::size_t{1} << s->r_value()));
                        for (std::size_t k = 0; k < sols.size(); ++k) {
                            CHECK(is_odd(sols[k].d_sum()));
                            CHECK(label_of(*s, sols[k]) == static_cast<int>(k) + 1);
                            CHECK(tuple_for_label(*s, pi, static_cast<int>(k) + 1) == sols[k]);
                        }
                    }
    }

    TEST_CASE("parity law without zero residues")
    {
        for (const auto* name : {"mod7", "mod5", "mod11"}) {
            const auto& s = preset(name).S_system;
            for (Int n = 1; n <= 15; ++n)
                for (const auto& pi : enumerate_colored(s, n)) {
                    const auto sols = solutions_for(s, pi);
                    REQUIRE(sols.size() == 1);
                    CHECK(is_odd(sols[0].d_sum()) == is_odd(static_cast<Int>(pi.length())));
                }
        }
    }

    TEST_CASE("count_solutions against a box oracle")
    {
        CHECK(count_solutions(preset("mod7").S_system, 15) == 6);
        CHECK(count_solutions(preset("mod7").T_system, 14) == 6);
        CHECK(count_solutions(preset("mod5").S_system, 1) == 4);
        CHECK(count_solutions(preset("mod5").S_system, -1) == 0);
        for (const auto& p : all_presets()) {
            if (p.name == "mod23")
                continue;
            for (const auto* s : {&p.S_system, &p.T_system})
                for (Int n = 0; n <= 30; ++n)
                    CHECK(count_solutions(*s, n) == oracle::solutions(*s, n, 6));
        }
        const auto& s23 = preset("mod23").T_system;
        for (Int n = 0; n <= 42; n += 7)
            CHECK(count_solutions(s23, n) == oracle::solutions(s23, n, 1));
    }

    TEST_CASE("streamed and materialized tuples agree")
    {
        const auto& s = preset("mod3").T_system;
        const PartitionCatalog cat(6);
        for (Int n = 0; n <= 36; n += 5) {
            std::vector<SolutionTuple> streamed;
            for_each_solution(s, n, cat, [&](const SolutionTuple& x) { streamed.push_back(x); });
            auto all = enumerate_solutions(s, n);
            std::sort(streamed.begin(), streamed.end());
            std::sort(all.begin(), all.end());
            CHECK(streamed == all);
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            CHECK(static_cast<Int>(all.size()) == count_solutions(s, n));
            for (const auto& x : all)
                CHECK(tuple_value(s, x) == n);
        }
    }

    TEST_CASE("flip")
    {
        const auto& t3 = preset("mod3").T_system;
        const auto x = tup({{}, {}, {}, {}}, {0, 1, 0, 0});
        const auto y = flip(t3, x, 1);
        CHECK(y.ds == std::vector<Int>{1, 1, 0, 0});
        CHECK(tuple_value(t3, y) == tuple_value(t3, x));
        const auto& t5 = preset("mod5").T_system;
        const auto z = flip(t5, tup({{}, {}, {}, {}}, {0, 0, -2, 1}), 3);
        CHECK(z.ds[2] == 3);
        CHECK(tuple_value(t5, z) == tuple_value(t5, tup({{}, {}, {}, {}}, {0, 0, -2, 1})));
        CHECK_THROWS_AS(flip(preset("mod7").S_system, x, 1), std::invalid_argument);
    }

    TEST_CASE("partition tuple series")
    {
        const std::vector<Int> moduli{2, 3};
        const auto series = partition_tuple_series(moduli, 30);
        const auto p = oracle::partition_table(30);
        for (Int n = 0; n <= 30; ++n) {
            Int direct = 0;
            for (Int a = 0; 2 * a <= n; ++a)
                if ((n - 2 * a) % 3 == 0)
                    direct += p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>((n - 2 * a) / 3)];
            CHECK(series[static_cast<std::size_t>(n)] == direct);
        }
    }
}
