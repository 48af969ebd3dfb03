#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

using namespace respdeg;
using namespace respdeg::testing;

namespace
{

model_error parse_error(std::string_view text)
{
    try
    {
        (void)parse_model(text);
    }
    catch (const model_error& e)
    {
        return e;
    }
    FAIL("expected a parse error");
    return model_error{ std::vector<diagnostic>{} };
}

bool same_semantics(const cgs& a, const cgs& b)
{
    if (a.agent_names() != b.agent_names() || a.state_names() != b.state_names() ||
        a.action_names() != b.action_names())
        return false;
    for (std::size_t q = 0; q < a.num_states(); ++q)
    {
        const state_id s{ q };
        for (std::size_t i = 0; i < a.num_agents(); ++i)
        {
            const auto x = a.available(s, agent_id{ i });
            const auto y = b.available(s, agent_id{ i });
            if (!std::equal(x.begin(), x.end(), y.begin(), y.end()))
                return false;
        }
        if (a.profile_count(s) != b.profile_count(s))
            return false;
        for (profile_code code = 0; code < a.profile_count(s); ++code)
            if (a.successor(s, code) != b.outcome(s, a.layout(s).decode(code)))
                return false;
    }
    return true;
}

} // namespace

TEST_CASE("parse E1")
{
    const auto doc = parse_model(read_data("e1.json"));
    CHECK(doc.agents.size() == 2);
    CHECK(doc.states.size() == 3);
    CHECK(doc.transitions.size() == 12);
    CHECK(doc.affairs.at("bad") == std::vector<std::string>{ "q2" });
}

TEST_CASE("empty document is a schema error at the root")
{
    auto e = parse_error("{}");
    REQUIRE_FALSE(e.diagnostics().empty());
    for (const auto& d : e.diagnostics())
    {
        CHECK(d.kind == error_kind::schema_error);
        CHECK(d.path.empty());
    }
    CHECK(parse_error("").diagnostics().front().kind == error_kind::syntax_error);
    CHECK(parse_error("[1,2]").diagnostics().front().kind == error_kind::schema_error);
}

TEST_CASE("syntax errors carry a line and column")
{
    auto e = parse_error("{\n  \"agents\": [\"a1\",\n  ]\n}");
    const auto& d = e.diagnostics().front();
    CHECK(d.kind == error_kind::syntax_error);
    REQUIRE(d.position);
    CHECK(d.position->line == 3);
    CHECK(d.position->column == 3);
}

TEST_CASE("schema errors name the offending path")
{
    auto text = read_data("e1.json");
    auto j = nlohmann::json::parse(text);
    j["transitions"][3]["to"] = 7;
    j["extra"] = true;
    auto e = parse_error(j.dump());
    std::vector<std::string> paths;
    for (const auto& d : e.diagnostics())
        paths.push_back(d.path);
    CHECK(std::find(paths.begin(), paths.end(), "/transitions/3/to") != paths.end());
    CHECK(std::find(paths.begin(), paths.end(), "/extra") != paths.end());
}

TEST_CASE("unknown names pass the parser and fail validation")
{
    auto j = nlohmann::json::parse(read_data("e1.json"));
    j["transitions"][0]["to"] = "q9";
    const auto doc = parse_model(j.dump());
    CHECK(doc.transitions[0].to == "q9");
    try
    {
        (void)validate_model(doc);
        FAIL("expected UnknownName");
    }
    catch (const model_error& e)
    {
        CHECK(e.diagnostics().front().kind == error_kind::unknown_name);
    }
}

TEST_CASE("canonical serialization")
{
    const auto e1 = load_e1();
    const auto once = serialize_model(e1.model, e1.affairs);
    const auto again = load_model(once);
    CHECK(serialize_model(again.model, again.affairs) == once);
    CHECK(same_semantics(e1.model, again.model));

    // Reordering transitions in the source does not change the output.
    auto j = nlohmann::json::parse(read_data("e1.json"));
    auto& ts = j["transitions"];
    std::reverse(ts.begin(), ts.end());
    std::mt19937 shuffle_rng{ 7 };
    std::shuffle(ts.begin(), ts.end(), shuffle_rng);
    const auto shuffled = load_model(j.dump());
    CHECK(serialize_model(shuffled.model, shuffled.affairs) == once);

    CHECK(once.find("{\"from\":\"q0\",\"profile\":{\"a1\":\"a\",\"a2\":\"a\"},\"to\":\"q2\"}") != std::string::npos);
}

TEST_CASE("round trip preserves 100 random models")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        generator_params p{ 1 + seed % 4, 1 + seed % 7, 1 + seed % 3, 0.6, 0, seed };
        const auto m = generate_model(p);
        named_affairs affairs{ { "bad", generate_affairs(m.num_states(), 0.3, seed) } };
        const auto text = serialize_model(m, affairs);
        const auto back = load_model(text);
        CHECK(same_semantics(m, back.model));
        CHECK(back.affairs.at("bad") == affairs.at("bad"));
        CHECK(serialize_model(back.model, back.affairs) == text);
    }
}

TEST_CASE("coalition and affair expressions")
{
    const auto e1 = load_e1();
    const auto& m = e1.model;
    CHECK(parse_coalition("a1,a2", m) == m.grand_coalition());
    CHECK(parse_coalition(" a2 ", m) == agents_of(m, { "a2" }));
    CHECK(parse_coalition("", m).empty());
    CHECK(parse_affairs("@bad", m, e1.affairs) == states_of(m, { "q2" }));
    CHECK(parse_affairs("q0,q1", m) == states_of(m, { "q0", "q1" }));
    CHECK(parse_affairs("", m).none());

    auto kind_of = [](auto&& f) {
        try
        {
            f();
        }
        catch (const model_error& e)
        {
            return e.diagnostics().front().kind;
        }
        return error_kind::syntax_error;
    };
    CHECK(kind_of([&] { parse_coalition("a1,a9", m); }) == error_kind::unknown_name);
    CHECK(kind_of([&] { parse_coalition("a1,a1", m); }) == error_kind::duplicate_member);
    CHECK(kind_of([&] { parse_affairs("@nope", m, e1.affairs); }) == error_kind::unknown_name);
    CHECK(kind_of([&] { parse_affairs("q2,q2", m); }) == error_kind::duplicate_member);
}

TEST_CASE("arbitrary bytes never escape as anything but model_error")
{
    std::mt19937_64 rng{ 42 };
    const auto base = read_data("e1.json");
    for (int i = 0; i < 2000; ++i)
    {
        std::string input = base;
        const auto edits = 1 + rng() % 8;
        for (std::uint64_t e = 0; e < edits && !input.empty(); ++e)
        {
            const auto at = rng() % input.size();
            switch (rng() % 3)
            {
            case 0: input[at] = static_cast<char>(rng() % 256); break;
            case 1: input.erase(at, 1 + rng() % 16); break;
            default: input.insert(at, 1, static_cast<char>(rng() % 256)); break;
            }
        }
        try
        {
            (void)load_model(input);
        }
        catch (const model_error&)
        {
        }
    }
}

TEST_CASE("content hash is stable")
{
    CHECK(content_hash("") == "cbf29ce484222325");
    CHECK(content_hash("a") == "af63dc4c8601ec8c");
}
