#include "respdeg/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace respdeg
{

using json = nlohmann::json;

namespace
{

source_position position_of(std::string_view text, std::size_t byte)
{
    source_position pos;
    const auto end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i)
    {
        if (text[i] == '\n')
        {
            ++pos.line;
            pos.column = 1;
        }
        else
        {
            ++pos.column;
        }
    }
    return pos;
}

class schema_checker
{
    std::vector<diagnostic> errors_;

public:
    void fail(std::string path, std::string message)
    {
        errors_.push_back(diagnostic{ error_kind::schema_error, std::move(message), std::move(path), std::nullopt });
    }

    [[nodiscard]] bool ok() const { return errors_.empty(); }
    std::vector<diagnostic> take() { return std::move(errors_); }

    bool string_value(const json& j, const std::string& path, std::string& out)
    {
        if (!j.is_string())
        {
            fail(path, "expected a string");
            return false;
        }
        out = j.get<std::string>();
        if (out.empty())
        {
            fail(path, "names must be non-empty");
            return false;
        }
        return true;
    }

    std::vector<std::string> string_list(const json& j, const std::string& path)
    {
        std::vector<std::string> out;
        if (!j.is_array())
        {
            fail(path, "expected an array of strings");
            return out;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
        {
            std::string s;
            if (string_value(j[i], path + "/" + std::to_string(i), s))
                out.push_back(std::move(s));
        }
        return out;
    }

    /// Checks that `j` is an object whose keys are all in `allowed` and that
    /// every key in `required` is present.
    bool object_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> required,
                     std::initializer_list<std::string_view> optional)
    {
        if (!j.is_object())
        {
            fail(path, "expected an object");
            return false;
        }
        bool good = true;
        for (auto key : required)
        {
            if (!j.contains(key))
            {
                fail(path, "missing required key \"" + std::string{ key } + "\"");
                good = false;
            }
        }
        for (const auto& [key, _] : j.items())
        {
            const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                               std::find(optional.begin(), optional.end(), key) != optional.end();
            if (!known)
            {
                fail(path + "/" + key, "unexpected key");
                good = false;
            }
        }
        return good;
    }
};

std::string format_tuple(const std::vector<std::string>& names)
{
    std::string out = "(";
    for (std::size_t i = 0; i < names.size(); ++i)
        out += (i ? "," : "") + names[i];
    return out + ")";
}

diagnostic make(error_kind kind, std::string message, std::string path = {})
{
    return diagnostic{ kind, std::move(message), std::move(path), std::nullopt };
}

template <class Id>
std::unordered_map<std::string, Id> index_names(const std::vector<std::string>& names, const char* kind,
                                                const char* path, std::vector<diagnostic>& errors)
{
    std::unordered_map<std::string, Id> out;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!out.emplace(names[i], Id{ i }).second)
            errors.push_back(make(error_kind::duplicate_name, std::string{ kind } + " \"" + names[i] + "\" is declared twice",
                                  std::string{ path } + "/" + std::to_string(i)));
    return out;
}

constexpr std::size_t max_missing_reports = 20;

} // namespace

model_document parse_model(std::string_view text)
{
    json root;
    try
    {
        root = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error& e)
    {
        throw model_error(diagnostic{ error_kind::syntax_error, e.what(), {}, position_of(text, e.byte) });
    }
    catch (const json::exception& e)
    {
        throw model_error(diagnostic{ error_kind::syntax_error, e.what(), {}, std::nullopt });
    }

    schema_checker check;
    model_document doc;
    if (!check.object_keys(root, "", { "agents", "states", "actions", "available", "transitions" }, { "affairs" }))
    {
        if (!root.is_object())
            throw model_error(check.take());
    }

    if (root.contains("agents"))
        doc.agents = check.string_list(root["agents"], "/agents");
    if (root.contains("states"))
        doc.states = check.string_list(root["states"], "/states");
    if (root.contains("actions"))
        doc.actions = check.string_list(root["actions"], "/actions");

    if (root.contains("available"))
    {
        const auto& avail = root["available"];
        if (!avail.is_object())
            check.fail("/available", "expected an object mapping states to agents");
        else
            for (const auto& [state, per_agent] : avail.items())
            {
                const auto path = "/available/" + state;
                if (!per_agent.is_object())
                {
                    check.fail(path, "expected an object mapping agents to action lists");
                    continue;
                }
                auto& slot = doc.available[state];
                for (const auto& [agent, acts] : per_agent.items())
                    slot[agent] = check.string_list(acts, path + "/" + agent);
            }
    }

    if (root.contains("transitions"))
    {
        const auto& ts = root["transitions"];
        if (!ts.is_array())
            check.fail("/transitions", "expected an array of transition records");
        else
            for (std::size_t i = 0; i < ts.size(); ++i)
            {
                const auto path = "/transitions/" + std::to_string(i);
                const auto& t = ts[i];
                if (!check.object_keys(t, path, { "from", "profile", "to" }, {}))
                    continue;
                transition_record rec;
                bool good = check.string_value(t["from"], path + "/from", rec.from);
                good = check.string_value(t["to"], path + "/to", rec.to) && good;
                const auto& prof = t["profile"];
                if (!prof.is_object())
                {
                    check.fail(path + "/profile", "expected an object mapping agents to actions");
                    good = false;
                }
                else
                    for (const auto& [agent, act] : prof.items())
                    {
                        std::string a;
                        if (check.string_value(act, path + "/profile/" + agent, a))
                            rec.profile[agent] = std::move(a);
                        else
                            good = false;
                    }
                if (good)
                    doc.transitions.push_back(std::move(rec));
            }
    }

    if (root.contains("affairs"))
    {
        const auto& affairs = root["affairs"];
        if (!affairs.is_object())
            check.fail("/affairs", "expected an object mapping labels to state lists");
        else
            for (const auto& [label, states] : affairs.items())
                doc.affairs[label] = check.string_list(states, "/affairs/" + label);
    }

    if (!check.ok())
        throw model_error(check.take());
    return doc;
}

cgs validate_model(const model_document& doc)
{
    std::vector<diagnostic> errors;
    const auto agents = index_names<agent_id>(doc.agents, "agent", "/agents", errors);
    const auto states = index_names<state_id>(doc.states, "state", "/states", errors);
    const auto actions = index_names<action_id>(doc.actions, "action", "/actions", errors);
    if (doc.agents.size() > max_agents)
        errors.push_back(make(error_kind::model_too_large,
                              "at most " + std::to_string(max_agents) + " agents are supported", "/agents"));
    if (doc.agents.empty())
        errors.push_back(make(error_kind::schema_error, "a model needs at least one agent", "/agents"));
    if (doc.states.empty())
        errors.push_back(make(error_kind::schema_error, "a model needs at least one state", "/states"));
    if (!errors.empty())
        throw model_error(std::move(errors));

    const auto k = doc.agents.size();
    const auto n = doc.states.size();
    std::vector<std::vector<std::vector<action_id>>> available(n, std::vector<std::vector<action_id>>(k));

    for (const auto& [state, per_agent] : doc.available)
    {
        const auto path = "/available/" + state;
        auto q = states.find(state);
        if (q == states.end())
        {
            errors.push_back(make(error_kind::unknown_name, "unknown state \"" + state + "\"", path));
            continue;
        }
        for (const auto& [agent, acts] : per_agent)
        {
            auto a = agents.find(agent);
            if (a == agents.end())
            {
                errors.push_back(make(error_kind::unknown_name, "unknown agent \"" + agent + "\"", path + "/" + agent));
                continue;
            }
            auto& slot = available[q->second.value][a->second.value];
            for (const auto& act : acts)
            {
                auto id = actions.find(act);
                if (id == actions.end())
                    errors.push_back(make(error_kind::unknown_name, "unknown action \"" + act + "\"", path + "/" + agent));
                else if (std::find(slot.begin(), slot.end(), id->second) != slot.end())
                    errors.push_back(make(error_kind::duplicate_member,
                                          "action \"" + act + "\" is listed twice", path + "/" + agent));
                else
                    slot.push_back(id->second);
            }
        }
    }
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t a = 0; a < k; ++a)
            if (available[q][a].empty())
                errors.push_back(make(error_kind::empty_available_set,
                                      "agent " + doc.agents[a] + " has no available action at state " + doc.states[q],
                                      "/available/" + doc.states[q] + "/" + doc.agents[a]));
    if (!errors.empty())
        throw model_error(std::move(errors));

    std::vector<profile_layout> layouts;
    layouts.reserve(n);
    for (std::size_t q = 0; q < n; ++q)
    {
        try
        {
            layouts.emplace_back(std::move(available[q]));
        }
        catch (const std::length_error&)
        {
            throw model_error(make(error_kind::model_too_large,
                                   "state " + doc.states[q] + " has more than " +
                                       std::to_string(max_profiles_per_state) + " action profiles",
                                   "/available/" + doc.states[q]));
        }
    }

    constexpr auto unset = state_id{ ~std::uint32_t{ 0 } };
    std::vector<std::vector<state_id>> successors(n);
    for (std::size_t q = 0; q < n; ++q)
        successors[q].assign(layouts[q].count(), unset);

    for (std::size_t i = 0; i < doc.transitions.size(); ++i)
    {
        const auto& t = doc.transitions[i];
        const auto path = "/transitions/" + std::to_string(i);
        bool good = true;
        auto from = states.find(t.from);
        auto to = states.find(t.to);
        if (from == states.end())
        {
            errors.push_back(make(error_kind::unknown_name, "unknown state \"" + t.from + "\"", path + "/from"));
            good = false;
        }
        if (to == states.end())
        {
            errors.push_back(make(error_kind::unknown_name, "unknown state \"" + t.to + "\"", path + "/to"));
            good = false;
        }
        action_profile profile{ std::vector<action_id>(k) };
        std::vector<bool> assigned(k, false);
        for (const auto& [agent, act] : t.profile)
        {
            auto a = agents.find(agent);
            auto id = actions.find(act);
            if (a == agents.end())
            {
                errors.push_back(make(error_kind::unknown_name, "unknown agent \"" + agent + "\"", path + "/profile"));
                good = false;
            }
            if (id == actions.end())
            {
                errors.push_back(make(error_kind::unknown_name, "unknown action \"" + act + "\"", path + "/profile/" + agent));
                good = false;
            }
            if (a != agents.end() && id != actions.end())
            {
                profile.choices[a->second.value] = id->second;
                assigned[a->second.value] = true;
            }
        }
        for (std::size_t a = 0; a < k; ++a)
        {
            if (!assigned[a])
            {
                errors.push_back(make(error_kind::schema_error, "profile does not assign agent " + doc.agents[a],
                                      path + "/profile"));
                good = false;
            }
        }
        if (!good)
            continue;

        const auto& layout = layouts[from->second.value];
        for (std::size_t a = 0; a < k && good; ++a)
        {
            if (!layout.digit_of(agent_id{ a }, profile.choices[a]))
            {
                errors.push_back(make(error_kind::unavailable_action,
                                      "action " + doc.actions[profile.choices[a].value] + " of agent " + doc.agents[a] +
                                          " is not available at state " + t.from,
                                      path + "/profile"));
                good = false;
            }
        }
        if (!good)
            continue;

        auto& slot = successors[from->second.value][*layout.encode(profile)];
        if (slot != unset)
        {
            std::vector<std::string> names;
            for (auto act : profile.choices)
                names.push_back(doc.actions[act.value]);
            errors.push_back(make(error_kind::duplicate_transition,
                                  "second transition for profile " + format_tuple(names) + " at state " + t.from, path));
            continue;
        }
        slot = to->second;
    }

    std::size_t missing = 0;
    for (std::size_t q = 0; q < n; ++q)
    {
        for (profile_code code = 0; code < layouts[q].count(); ++code)
        {
            if (successors[q][code] != unset)
                continue;
            if (++missing > max_missing_reports)
                continue;
            std::vector<std::string> names;
            for (auto act : layouts[q].decode(code).choices)
                names.push_back(doc.actions[act.value]);
            errors.push_back(make(error_kind::missing_transition,
                                  "no transition for profile " + format_tuple(names) + " at state " + doc.states[q],
                                  "/transitions"));
        }
    }
    if (missing > max_missing_reports)
        errors.push_back(make(error_kind::missing_transition,
                              std::to_string(missing - max_missing_reports) + " further profiles have no transition",
                              "/transitions"));
    if (!errors.empty())
        throw model_error(std::move(errors));

    return cgs{ doc.agents, doc.states, doc.actions, std::move(layouts), std::move(successors) };
}

named_affairs validate_affairs(const model_document& doc, const cgs& model)
{
    std::vector<diagnostic> errors;
    named_affairs out;
    for (const auto& [label, names] : doc.affairs)
    {
        state_set set{ model.num_states() };
        for (const auto& name : names)
        {
            auto q = model.find_state(name);
            if (!q)
                errors.push_back(make(error_kind::unknown_name, "unknown state \"" + name + "\"", "/affairs/" + label));
            else if (set.test(*q))
                errors.push_back(make(error_kind::duplicate_member, "state \"" + name + "\" is listed twice",
                                      "/affairs/" + label));
            else
                set.set(*q);
        }
        out.emplace(label, std::move(set));
    }
    if (!errors.empty())
        throw model_error(std::move(errors));
    return out;
}

loaded_model load_model(std::string_view text)
{
    const auto doc = parse_model(text);
    auto model = validate_model(doc);
    auto affairs = validate_affairs(doc, model);
    return loaded_model{ std::move(model), std::move(affairs) };
}

namespace
{

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string name_list(const std::vector<std::string>& names)
{
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i)
        out += (i ? ", " : "") + quoted(names[i]);
    return out + "]";
}

} // namespace

std::string serialize_model(const cgs& model, const named_affairs& affairs)
{
    std::string out = "{\n";
    out += "  \"actions\": " + name_list(model.action_names()) + ",\n";
    if (!affairs.empty())
    {
        out += "  \"affairs\": {";
        bool first = true;
        for (const auto& [label, states] : affairs)
        {
            std::vector<std::string> names;
            for (auto q : states.elements())
                names.push_back(model.state_name(q));
            out += (first ? "" : ", ") + quoted(label) + ": " + name_list(names);
            first = false;
        }
        out += "},\n";
    }
    out += "  \"agents\": " + name_list(model.agent_names()) + ",\n";

    std::vector<state_id> by_name;
    for (std::size_t q = 0; q < model.num_states(); ++q)
        by_name.emplace_back(q);
    std::sort(by_name.begin(), by_name.end(),
              [&](state_id a, state_id b) { return model.state_name(a) < model.state_name(b); });

    out += "  \"available\": {\n";
    for (std::size_t i = 0; i < by_name.size(); ++i)
    {
        const auto q = by_name[i];
        json per_agent = json::object();
        for (std::size_t a = 0; a < model.num_agents(); ++a)
        {
            json acts = json::array();
            for (auto act : model.available(q, agent_id{ a }))
                acts.push_back(model.action_name(act));
            per_agent[model.agent_name(agent_id{ a })] = std::move(acts);
        }
        out += "    " + quoted(model.state_name(q)) + ": " + per_agent.dump() + (i + 1 < by_name.size() ? ",\n" : "\n");
    }
    out += "  },\n";
    out += "  \"states\": " + name_list(model.state_names()) + ",\n";

    out += "  \"transitions\": [\n";
    const auto total = model.num_transitions();
    std::size_t written = 0;
    for (std::size_t q = 0; q < model.num_states(); ++q)
    {
        const state_id from{ q };
        const auto& layout = model.layout(from);
        for (profile_code code = 0; code < layout.count(); ++code)
        {
            const auto profile = layout.decode(code);
            json record = json::object();
            record["from"] = model.state_name(from);
            record["to"] = model.state_name(model.successor(from, code));
            json prof = json::object();
            for (std::size_t a = 0; a < model.num_agents(); ++a)
                prof[model.agent_name(agent_id{ a })] = model.action_name(profile.choices[a]);
            record["profile"] = std::move(prof);
            out += "    " + record.dump() + (++written < total ? ",\n" : "\n");
        }
    }
    out += "  ]\n}\n";
    return out;
}

namespace
{

std::vector<std::string_view> split_names(std::string_view text)
{
    std::vector<std::string_view> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty())
        return out;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = text.find(',', start);
        out.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

coalition parse_coalition(std::string_view text, const cgs& model)
{
    coalition out;
    std::vector<diagnostic> errors;
    for (auto name : split_names(text))
    {
        auto a = model.find_agent(name);
        if (!a)
            errors.push_back(make(error_kind::unknown_name, "unknown agent \"" + std::string{ name } + "\""));
        else if (out.contains(*a))
            errors.push_back(make(error_kind::duplicate_member, "agent \"" + std::string{ name } + "\" is listed twice"));
        else
            out.insert(*a);
    }
    if (!errors.empty())
        throw model_error(std::move(errors));
    return out;
}

state_set parse_affairs(std::string_view text, const cgs& model, const named_affairs& affairs)
{
    if (!text.empty() && text.front() == '@')
    {
        auto it = affairs.find(std::string{ text.substr(1) });
        if (it == affairs.end())
            throw model_error(make(error_kind::unknown_name, "unknown affair label \"" + std::string{ text } + "\""));
        return it->second;
    }
    state_set out{ model.num_states() };
    std::vector<diagnostic> errors;
    for (auto name : split_names(text))
    {
        auto q = model.find_state(name);
        if (!q)
            errors.push_back(make(error_kind::unknown_name, "unknown state \"" + std::string{ name } + "\""));
        else if (out.test(*q))
            errors.push_back(make(error_kind::duplicate_member, "state \"" + std::string{ name } + "\" is listed twice"));
        else
            out.set(*q);
    }
    if (!errors.empty())
        throw model_error(std::move(errors));
    return out;
}

std::string format_coalition(const cgs& model, coalition c)
{
    std::string out = "{";
    bool first = true;
    for (auto a : c.members())
    {
        out += (first ? "" : ",") + model.agent_name(a);
        first = false;
    }
    return out + "}";
}

std::string format_states(const cgs& model, const state_set& states)
{
    std::string out = "{";
    bool first = true;
    for (auto q : states.elements())
    {
        out += (first ? "" : ",") + model.state_name(q);
        first = false;
    }
    return out + "}";
}

std::string content_hash(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace respdeg
