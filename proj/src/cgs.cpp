#include "respdeg/cgs.hpp"

#include "respdeg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace respdeg
{

profile_layout::profile_layout(std::vector<std::vector<action_id>> available)
    : available_{ std::move(available) }, stride_(available_.size(), 1)
{
    for (auto& acts : available_)
    {
        if (acts.empty())
            throw std::invalid_argument("empty available action set");
        std::sort(acts.begin(), acts.end());
        if (std::adjacent_find(acts.begin(), acts.end()) != acts.end())
            throw std::invalid_argument("duplicate available action");
    }
    for (std::size_t i = available_.size(); i-- > 0;)
    {
        stride_[i] = count_;
        if (count_ > max_profiles_per_state / available_[i].size())
            throw std::length_error("too many action profiles at one state");
        count_ *= available_[i].size();
    }
}

std::optional<std::uint64_t> profile_layout::digit_of(agent_id a, action_id act) const
{
    const auto& acts = available_[a.value];
    auto it = std::lower_bound(acts.begin(), acts.end(), act);
    if (it == acts.end() || *it != act)
        return std::nullopt;
    return static_cast<std::uint64_t>(it - acts.begin());
}

std::optional<profile_code> profile_layout::encode(const action_profile& p) const
{
    if (p.choices.size() != available_.size())
        return std::nullopt;
    profile_code code = 0;
    for (std::size_t i = 0; i < available_.size(); ++i)
    {
        auto d = digit_of(agent_id{ i }, p.choices[i]);
        if (!d)
            return std::nullopt;
        code += *d * stride_[i];
    }
    return code;
}

action_profile profile_layout::decode(profile_code code) const
{
    action_profile p;
    p.choices.reserve(available_.size());
    for (std::size_t i = 0; i < available_.size(); ++i)
        p.choices.push_back(available_[i][digit(code, agent_id{ i })]);
    return p;
}

namespace
{

template <class Id>
std::unordered_map<std::string, Id> index_names(const std::vector<std::string>& names, const char* kind)
{
    std::unordered_map<std::string, Id> out;
    out.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
    {
        if (names[i].empty())
            throw std::invalid_argument(std::string{ "empty " } + kind + " name");
        if (!out.emplace(names[i], Id{ i }).second)
            throw std::invalid_argument(std::string{ "duplicate " } + kind + " name: " + names[i]);
    }
    return out;
}

template <class Id>
std::optional<Id> lookup(const std::unordered_map<std::string, Id>& index, std::string_view name)
{
    auto it = index.find(std::string{ name });
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

} // namespace

cgs::cgs(std::vector<std::string> agents, std::vector<std::string> states, std::vector<std::string> actions,
         std::vector<profile_layout> layouts, std::vector<std::vector<state_id>> successors)
    : agents_{ std::move(agents) }, states_{ std::move(states) }, actions_{ std::move(actions) },
      agent_index_{ index_names<agent_id>(agents_, "agent") }, state_index_{ index_names<state_id>(states_, "state") },
      action_index_{ index_names<action_id>(actions_, "action") }, layouts_{ std::move(layouts) },
      successors_{ std::move(successors) }
{
    if (agents_.size() > max_agents)
        throw std::invalid_argument("too many agents");
    if (layouts_.size() != states_.size() || successors_.size() != states_.size())
        throw std::invalid_argument("per-state tables do not match the state list");

    std::vector<std::size_t> in_degree(states_.size(), 0);
    for (std::size_t q = 0; q < states_.size(); ++q)
    {
        const auto& layout = layouts_[q];
        if (layout.num_agents() != agents_.size())
            throw std::invalid_argument("profile layout does not cover every agent");
        for (std::size_t a = 0; a < agents_.size(); ++a)
            for (auto act : layout.available(agent_id{ a }))
                if (act.value >= actions_.size())
                    throw std::invalid_argument("available action out of range");
        if (successors_[q].size() != layout.count())
            throw std::invalid_argument("transition table is not total at state " + states_[q]);
        for (auto to : successors_[q])
        {
            if (to.value >= states_.size())
                throw std::invalid_argument("successor out of range");
            ++in_degree[to.value];
        }
    }

    pred_offsets_.assign(states_.size() + 1, 0);
    for (std::size_t q = 0; q < states_.size(); ++q)
        pred_offsets_[q + 1] = pred_offsets_[q] + in_degree[q];
    preds_.resize(pred_offsets_.back());
    auto fill = pred_offsets_;
    edge_offsets_.assign(states_.size() + 1, 0);
    std::vector<profile_code> first_code(states_.size());
    std::vector<char> seen(states_.size(), 0);
    for (std::size_t q = 0; q < states_.size(); ++q)
    {
        std::vector<state_id> distinct;
        const auto& succ = successors_[q];
        for (profile_code code = 0; code < succ.size(); ++code)
        {
            const auto to = succ[code];
            preds_[fill[to.value]++] = predecessor{ state_id{ q }, code };
            if (!seen[to.value])
            {
                seen[to.value] = 1;
                first_code[to.value] = code;
                distinct.push_back(to);
            }
        }
        std::sort(distinct.begin(), distinct.end());
        for (auto to : distinct)
        {
            edges_.push_back(edge{ to, first_code[to.value] });
            seen[to.value] = 0;
        }
        edge_offsets_[q + 1] = edges_.size();
    }
}

std::size_t cgs::num_transitions() const
{
    std::size_t n = 0;
    for (const auto& succ : successors_)
        n += succ.size();
    return n;
}

std::optional<agent_id> cgs::find_agent(std::string_view name) const { return lookup(agent_index_, name); }
std::optional<state_id> cgs::find_state(std::string_view name) const { return lookup(state_index_, name); }
std::optional<action_id> cgs::find_action(std::string_view name) const { return lookup(action_index_, name); }

profile_code cgs::encode(state_id s, const action_profile& profile) const
{
    const auto& layout = layouts_[s.value];
    if (profile.choices.size() != agents_.size())
        throw std::invalid_argument("action profile must assign one action per agent");
    for (std::size_t a = 0; a < agents_.size(); ++a)
    {
        const auto act = profile.choices[a];
        if (act.value >= actions_.size() || !layout.digit_of(agent_id{ a }, act))
        {
            const auto act_name = act.value < actions_.size() ? actions_[act.value] : "#" + std::to_string(act.value);
            throw model_error(diagnostic{ error_kind::unavailable_action,
                                          "action " + act_name + " of agent " + agents_[a] +
                                              " is not available at state " + states_[s.value],
                                          {},
                                          std::nullopt });
        }
    }
    return *layout.encode(profile);
}

state_id cgs::outcome(state_id s, const action_profile& profile) const { return successor(s, encode(s, profile)); }

std::uint64_t cgs::joint_count(state_id s, coalition c) const
{
    std::uint64_t n = 1;
    for (auto a : c.members())
        n *= layouts_[s.value].radix(a);
    return n;
}

std::uint64_t cgs::project(state_id s, std::span<const agent_id> members, profile_code code) const
{
    const auto& layout = layouts_[s.value];
    std::uint64_t j = 0;
    for (auto a : members)
        j = j * layout.radix(a) + layout.digit(code, a);
    return j;
}

std::vector<joint_action> cgs::joint_actions(state_id s, coalition c) const
{
    const auto& layout = layouts_[s.value];
    const auto members = c.members();
    const auto total = joint_count(s, c);
    std::vector<joint_action> out;
    out.reserve(total);
    for (std::uint64_t j = 0; j < total; ++j)
    {
        joint_action ja{ c, std::vector<action_id>(members.size()) };
        auto rest = j;
        for (std::size_t m = members.size(); m-- > 0;)
        {
            const auto radix = layout.radix(members[m]);
            ja.choices[m] = layout.available(members[m])[rest % radix];
            rest /= radix;
        }
        out.push_back(std::move(ja));
    }
    return out;
}

std::vector<action_profile> cgs::completions(state_id s, const joint_action& joint) const
{
    const auto& layout = layouts_[s.value];
    const auto members = joint.members.members();
    std::vector<action_profile> out;
    for (profile_code code = 0; code < layout.count(); ++code)
    {
        auto p = layout.decode(code);
        bool agrees = true;
        for (std::size_t m = 0; m < members.size() && agrees; ++m)
            agrees = p.choices[members[m].value] == joint.choices[m];
        if (agrees)
            out.push_back(std::move(p));
    }
    return out;
}

std::string format_profile(const cgs& model, const action_profile& profile)
{
    std::string out;
    for (std::size_t a = 0; a < profile.choices.size(); ++a)
    {
        if (a)
            out += ',';
        out += model.agent_name(agent_id{ a }) + "=" + model.action_name(profile.choices[a]);
    }
    return out;
}

} // namespace respdeg
