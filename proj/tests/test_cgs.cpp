#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <algorithm>

using namespace respdeg;
using namespace respdeg::testing;

namespace
{

bool has_kind(const model_error& e, error_kind kind)
{
    return std::any_of(e.diagnostics().begin(), e.diagnostics().end(),
                       [kind](const diagnostic& d) { return d.kind == kind; });
}

template <class Mutate>
model_error validation_error(Mutate&& mutate)
{
    auto doc = parse_model(read_data("e1.json"));
    mutate(doc);
    try
    {
        (void)validate_model(doc);
    }
    catch (const model_error& e)
    {
        return e;
    }
    FAIL("expected validation to fail");
    return model_error{ std::vector<diagnostic>{} };
}

} // namespace

TEST_CASE("E1 validates to two agents and three states")
{
    const auto e1 = load_e1();
    CHECK(e1.model.num_agents() == 2);
    CHECK(e1.model.num_states() == 3);
    CHECK(e1.model.num_actions() == 2);
    CHECK(e1.model.num_transitions() == 12);
    CHECK(e1.affairs.at("bad") == states_of(e1.model, { "q2" }));
}

TEST_CASE("validation errors")
{
    SUBCASE("empty available set")
    {
        auto e = validation_error([](model_document& d) { d.available["q0"]["a1"].clear(); });
        CHECK(has_kind(e, error_kind::empty_available_set));
    }
    SUBCASE("missing availability entry counts as empty")
    {
        auto e = validation_error([](model_document& d) { d.available["q1"].erase("a2"); });
        CHECK(has_kind(e, error_kind::empty_available_set));
    }
    SUBCASE("missing transition")
    {
        auto e = validation_error([](model_document& d) {
            std::erase_if(d.transitions, [](const transition_record& t) {
                return t.from == "q0" && t.profile.at("a1") == "a" && t.profile.at("a2") == "a";
            });
        });
        REQUIRE(e.diagnostics().size() == 1);
        CHECK(e.diagnostics()[0].kind == error_kind::missing_transition);
        CHECK(e.diagnostics()[0].message.find("(a,a) at state q0") != std::string::npos);
    }
    SUBCASE("duplicate transition")
    {
        auto e = validation_error([](model_document& d) { d.transitions.push_back(d.transitions.front()); });
        CHECK(has_kind(e, error_kind::duplicate_transition));
    }
    SUBCASE("unknown state in a transition")
    {
        auto e = validation_error([](model_document& d) { d.transitions.front().to = "q9"; });
        CHECK(has_kind(e, error_kind::unknown_name));
    }
    SUBCASE("duplicate agent name")
    {
        auto e = validation_error([](model_document& d) { d.agents.push_back("a1"); });
        CHECK(has_kind(e, error_kind::duplicate_name));
    }
    SUBCASE("transition on an unavailable action")
    {
        auto e = validation_error([](model_document& d) {
            d.available["q1"]["a1"] = { "a" };
            std::erase_if(d.transitions, [](const transition_record& t) {
                return t.from == "q1" && t.profile.at("a1") == "b" && t.profile.at("a2") == "a";
            });
        });
        CHECK(has_kind(e, error_kind::unavailable_action));
    }
    SUBCASE("profile missing an agent")
    {
        auto e = validation_error([](model_document& d) { d.transitions.front().profile.erase("a2"); });
        CHECK(has_kind(e, error_kind::schema_error));
    }
}

TEST_CASE("outcome reads the transition table")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    CHECK(m.outcome(*m.find_state("q0"), profile_of(m, { "a", "a" })) == *m.find_state("q2"));
    CHECK(m.outcome(*m.find_state("q0"), profile_of(m, { "a", "b" })) == *m.find_state("q1"));
    CHECK(m.outcome(*m.find_state("q1"), profile_of(m, { "a", "b" })) == *m.find_state("q1"));

    // Action "c" does not exist in E1; use an out-of-range id.
    action_profile bogus{ { *m.find_action("a"), action_id{ 2 } } };
    try
    {
        (void)m.outcome(*m.find_state("q0"), bogus);
        FAIL("expected UnavailableAction");
    }
    catch (const model_error& e)
    {
        CHECK(e.diagnostics().front().kind == error_kind::unavailable_action);
    }
}

TEST_CASE("joint actions and completions on E1")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    const auto q0 = *m.find_state("q0");

    const auto solo = m.joint_actions(q0, agents_of(m, { "a1" }));
    REQUIRE(solo.size() == 2);
    CHECK(solo[0].choices == std::vector<action_id>{ *m.find_action("a") });
    CHECK(solo[1].choices == std::vector<action_id>{ *m.find_action("b") });

    CHECK(m.joint_actions(q0, coalition{}).size() == 1);
    CHECK(m.joint_actions(q0, coalition{}).front().choices.empty());
    CHECK(m.joint_actions(q0, m.grand_coalition()).size() == 4);

    const auto completed = m.completions(q0, solo[0]);
    REQUIRE(completed.size() == 2);
    CHECK(completed[0] == profile_of(m, { "a", "a" }));
    CHECK(completed[1] == profile_of(m, { "a", "b" }));

    const auto full = m.joint_actions(q0, m.grand_coalition())[2];
    CHECK(m.completions(q0, full).size() == 1);
    CHECK(m.completions(q0, m.joint_actions(q0, coalition{}).front()).size() == 4);
}

TEST_CASE("profile codes follow lexicographic profile order")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    const auto q0 = *m.find_state("q0");
    CHECK(m.encode(q0, profile_of(m, { "a", "b" })) < m.encode(q0, profile_of(m, { "b", "a" })));
    for (profile_code code = 0; code < m.profile_count(q0); ++code)
        CHECK(m.encode(q0, m.layout(q0).decode(code)) == code);
}

TEST_CASE("joint action and completion counts on random models")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed)
    {
        generator_params p{ 1 + seed % 4, 1 + seed % 5, 3, 0.5, 0, seed };
        const auto m = generate_model(p);
        for (std::size_t qi = 0; qi < m.num_states(); ++qi)
        {
            const state_id q{ qi };
            for (auto c : coalitions_by_size(m.num_agents(), true))
            {
                std::uint64_t expected = 1;
                for (auto a : c.members())
                    expected *= m.available(q, a).size();
                const auto joints = m.joint_actions(q, c);
                REQUIRE(joints.size() == expected);

                const auto members = c.members();
                std::size_t total = 0;
                for (const auto& j : joints)
                {
                    for (const auto& p : m.completions(q, j))
                    {
                        ++total;
                        for (std::size_t i = 0; i < members.size(); ++i)
                            CHECK(p.choices[members[i].value] == j.choices[i]);
                        CHECK(m.outcome(q, p) == m.successor(q, m.encode(q, p)));
                    }
                }
                CHECK(total == m.profile_count(q));
            }
        }
    }
}

TEST_CASE("coalition bit operations")
{
    const coalition a{ 0b0101 };
    const coalition b{ 0b0111 };
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(b.minus(a) == coalition{ 0b0010 });
    CHECK(a.size() == 2);
    CHECK(coalition::first_n(64).size() == 64);

    const auto order = coalitions_by_size(3, true);
    REQUIRE(order.size() == 8);
    CHECK(order[0].bits() == 0);
    CHECK(order[1].bits() == 1);
    CHECK(order[3].bits() == 4);
    CHECK(order[4].bits() == 3);
    CHECK(order[7].bits() == 7);
}

TEST_CASE("state sets")
{
    state_set s{ 70 };
    s.set(state_id{ 0 });
    s.set(state_id{ 69 });
    CHECK(s.count() == 2);
    CHECK(s.complement().count() == 68);
    CHECK_FALSE(s.complement().test(state_id{ 69 }));
    CHECK(s.is_subset_of(state_set{ 70, true }));
    CHECK(s.elements().back() == state_id{ 69 });
}
