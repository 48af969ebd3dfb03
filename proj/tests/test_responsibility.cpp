#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respdeg/oracle.hpp"
#include "respdeg/responsibility.hpp"
#include "test_support.hpp"

using namespace respdeg;
using namespace respdeg::testing;

namespace
{

constexpr auto future = preclusion_semantics::future_avoidance;
constexpr auto initial = preclusion_semantics::include_initial;

bool reaches_itself(const cgs& m, state_id q)
{
    state_set seen{ m.num_states() };
    std::vector<state_id> stack;
    for (const auto& e : m.edges(q))
        if (!seen.test(e.to))
        {
            seen.set(e.to);
            stack.push_back(e.to);
        }
    while (!stack.empty())
    {
        auto s = stack.back();
        stack.pop_back();
        for (const auto& e : m.edges(s))
            if (!seen.test(e.to))
            {
                seen.set(e.to);
                stack.push_back(e.to);
            }
    }
    return seen.test(q);
}

} // namespace

TEST_CASE("cpre on E1")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    const auto q1 = states_of(m, { "q1" });
    CHECK(cpre(m, m.grand_coalition(), q1) == states_of(m, { "q0", "q1" }));
    CHECK(cpre(m, agents_of(m, { "a1" }), q1) == q1);
    for (auto c : coalitions_by_size(2, true))
        CHECK(cpre(m, c, m.all_states()) == m.all_states());
}

TEST_CASE("safe region on E1")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    const auto bad = states_of(m, { "q2" });
    CHECK(safe_region(m, agents_of(m, { "a1" }), bad) == states_of(m, { "q1" }));
    CHECK(safe_region(m, m.grand_coalition(), bad) == states_of(m, { "q0", "q1" }));
    CHECK(safe_region(m, agents_of(m, { "a2" }), state_set{ 3 }) == m.all_states());
}

TEST_CASE("can_preclude on E1, oracle first")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    const auto bad = states_of(m, { "q2" });
    const auto q0 = *m.find_state("q0");
    const auto q1 = *m.find_state("q1");
    const auto a1 = agents_of(m, { "a1" });

    for (auto sem : { future, initial })
    {
        REQUIRE(oracle_can_preclude(m, m.grand_coalition(), q0, bad, sem));
        REQUIRE_FALSE(oracle_can_preclude(m, a1, q0, bad, sem));
        REQUIRE(oracle_can_preclude(m, a1, q1, bad, sem));

        CHECK(can_preclude(m, m.grand_coalition(), q0, bad, sem));
        CHECK_FALSE(can_preclude(m, a1, q0, bad, sem));
        CHECK(can_preclude(m, a1, q1, bad, sem));
    }
}

TEST_CASE("responsible coalitions on E1")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    const auto bad = states_of(m, { "q2" });
    const auto at = [&](const char* q) { return responsible_coalitions(m, *m.find_state(q), bad, future).coalitions; };

    CHECK(at("q0") == std::vector<coalition>{ coalition{ 0b11 } });
    CHECK(at("q1") == std::vector<coalition>{ coalition{ 0b01 }, coalition{ 0b10 }, coalition{ 0b11 } });
    CHECK(at("q2").empty());

    // The same sets come out of the oracle.
    for (const char* q : { "q0", "q1", "q2" })
    {
        std::vector<coalition> expected;
        for (auto c : coalitions_by_size(2, false))
            if (oracle_can_preclude(m, c, *m.find_state(q), bad, future))
                expected.push_back(c);
        CHECK(at(q) == expected);
    }
}

TEST_CASE("minimal responsible coalitions")
{
    const responsible_set both{ state_id{ 0 }, state_set{ 1 }, { coalition{ 1 }, coalition{ 2 }, coalition{ 3 } } };
    CHECK(minimal_responsible_coalitions(both) == std::vector<coalition>{ coalition{ 1 }, coalition{ 2 } });
    const responsible_set grand{ state_id{ 0 }, state_set{ 1 }, { coalition{ 3 } } };
    CHECK(minimal_responsible_coalitions(grand) == std::vector<coalition>{ coalition{ 3 } });
    const responsible_set none{ state_id{ 0 }, state_set{ 1 }, {} };
    CHECK(minimal_responsible_coalitions(none).empty());

    const std::vector<coalition> antichain{ coalition{ 1 }, coalition{ 2 } };
    CHECK(upward_closure(antichain, 2) == both.coalitions);
}

TEST_CASE("worklist and Kleene iteration agree")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed)
    {
        generator_params p{ 1 + seed % 4, 2 + seed % 9, 3, 0.5, 0, seed };
        const auto m = generate_model(p);
        const auto affairs = generate_affairs(m.num_states(), 0.3, seed + 1);
        for (auto c : coalitions_by_size(m.num_agents(), true))
            CHECK(safe_region(m, c, affairs) == safe_region_by_iteration(m, c, affairs));
    }
}

TEST_CASE("safe region shape on random models")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed)
    {
        generator_params p{ 1 + seed % 3, 2 + seed % 6, 2, 0.6, 0, seed };
        const auto m = generate_model(p);
        const auto small = generate_affairs(m.num_states(), 0.2, seed);
        auto large = small;
        large |= generate_affairs(m.num_states(), 0.3, seed + 100);

        for (auto c : coalitions_by_size(m.num_agents(), true))
        {
            const auto region = safe_region(m, c, large);
            CHECK(region.is_subset_of(large.complement()));
            CHECK(region.is_subset_of(safe_region(m, c, small)));
            CHECK(region.is_subset_of(safe_region(m, m.grand_coalition(), large)));
            CHECK(safe_region(m, coalition{}, large).is_subset_of(region));
        }
    }
}

TEST_CASE("preclusion is monotone in the coalition")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed)
    {
        const auto m = small_model(seed);
        const auto affairs = generate_affairs(m.num_states(), 0.35, seed);
        for (auto sem : { future, initial })
            for (std::size_t q = 0; q < m.num_states(); ++q)
                for (auto c : coalitions_by_size(m.num_agents(), true))
                    for (auto d : coalitions_by_size(m.num_agents(), true))
                        if (c.is_subset_of(d) && can_preclude(m, c, state_id{ q }, affairs, sem))
                            CHECK(can_preclude(m, d, state_id{ q }, affairs, sem));
    }
}

TEST_CASE("the current state only matters under include-initial")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed)
    {
        generator_params p{ 1 + seed % 3, 2 + seed % 5, 2, 0.6, 0, seed };
        const auto m = generate_model(p);
        const auto affairs = generate_affairs(m.num_states(), 0.3, seed);
        for (std::size_t qi = 0; qi < m.num_states(); ++qi)
        {
            const state_id q{ qi };
            auto with = affairs;
            with.set(q);
            auto without = affairs;
            without.reset(q);
            for (auto c : coalitions_by_size(m.num_agents(), true))
            {
                CHECK_FALSE(can_preclude(m, c, q, with, initial));
                // A play only returns to q through a cycle, so without one the
                // verdict cannot see q's own membership.
                if (!reaches_itself(m, q))
                    CHECK(can_preclude(m, c, q, with, future) == can_preclude(m, c, q, without, future));
                if (can_preclude(m, c, q, affairs, initial))
                    CHECK(can_preclude(m, c, q, affairs, future));
            }
        }
    }
}

TEST_CASE("responsible sets are upward closed, thread independent and match single checks")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed)
    {
        generator_params p{ 1 + seed % 5, 3 + seed % 6, 3, 0.5, 0, seed };
        const auto m = generate_model(p);
        const auto affairs = generate_affairs(m.num_states(), 0.25, seed);
        for (std::size_t qi = 0; qi < m.num_states(); ++qi)
        {
            const state_id q{ qi };
            const auto one = responsible_coalitions(m, q, affairs, future, 1);
            const auto many = responsible_coalitions(m, q, affairs, future, 4);
            CHECK(one.coalitions == many.coalitions);

            for (auto c : coalitions_by_size(m.num_agents(), false))
                CHECK(one.contains(c) == can_preclude(m, c, q, affairs, future));
            for (auto c : one.coalitions)
            {
                CHECK_FALSE(c.empty());
                for (auto d : coalitions_by_size(m.num_agents(), false))
                    if (c.is_subset_of(d))
                        CHECK(one.contains(d));
            }
            const auto antichain = minimal_responsible_coalitions(one);
            CHECK(upward_closure(antichain, m.num_agents()) == one.coalitions);
        }
    }
}

TEST_CASE("preclusion cache matches direct computation")
{
    const auto m = generate_model({ 4, 12, 3, 0.5, 0, 99 });
    const auto affairs = generate_affairs(12, 0.3, 5);
    const preclusion_cache cache{ m, affairs, future };
    for (auto c : coalitions_by_size(4, true))
        CHECK(cache.winning(c) == winning_states(m, c, affairs, future));
}
