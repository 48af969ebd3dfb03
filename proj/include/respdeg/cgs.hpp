#pragma once

#include "respdeg/bitset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace respdeg
{

/// Mixed-radix index of a full action profile at one state. Agent 0 is the
/// most significant digit, so codes follow the lexicographic order of the
/// profile tuples.
using profile_code = std::uint64_t;

/// Upper bound on the number of action profiles available at a single state.
inline constexpr std::uint64_t max_profiles_per_state = std::uint64_t{ 1 } << 26;

/// One action for every agent, indexed by agent.
struct action_profile
{
    std::vector<action_id> choices;

    bool operator==(const action_profile&) const = default;
};

/// One action for every member of a coalition, in ascending member order.
struct joint_action
{
    coalition members;
    std::vector<action_id> choices;

    bool operator==(const joint_action&) const = default;
};

/// Encoding of the available profiles at a single state.
class profile_layout
{
    std::vector<std::vector<action_id>> available_;
    std::vector<std::uint64_t> stride_;
    std::uint64_t count_ = 1;

public:
    profile_layout() = default;

    /// `available[agent]` must be non-empty and duplicate free; it is sorted
    /// here. Throws std::length_error when the product exceeds
    /// `max_profiles_per_state`.
    explicit profile_layout(std::vector<std::vector<action_id>> available);

    [[nodiscard]] std::size_t num_agents() const { return available_.size(); }
    [[nodiscard]] std::uint64_t count() const { return count_; }
    [[nodiscard]] std::span<const action_id> available(agent_id a) const { return available_[a.value]; }
    [[nodiscard]] std::uint64_t radix(agent_id a) const { return available_[a.value].size(); }
    [[nodiscard]] std::uint64_t stride(agent_id a) const { return stride_[a.value]; }

    /// Position of `act` in the sorted available list of `a`, if available.
    [[nodiscard]] std::optional<std::uint64_t> digit_of(agent_id a, action_id act) const;
    [[nodiscard]] std::uint64_t digit(profile_code code, agent_id a) const
    {
        return (code / stride_[a.value]) % available_[a.value].size();
    }

    /// Nullopt when some choice is unavailable here.
    [[nodiscard]] std::optional<profile_code> encode(const action_profile& p) const;
    [[nodiscard]] action_profile decode(profile_code code) const;
};

struct predecessor
{
    state_id from;
    profile_code code;
};

/// A distinct successor of a state, with the smallest profile code reaching it.
struct edge
{
    state_id to;
    profile_code code;
};

/// A validated, immutable Concurrent Game Structure.
///
/// Agents, states and actions are dense indices with side tables for names.
/// The transition function is total and deterministic over the available
/// profiles of each state and is stored as a successor table indexed by
/// profile code.
class cgs
{
public:
    cgs(std::vector<std::string> agents, std::vector<std::string> states, std::vector<std::string> actions,
        std::vector<profile_layout> layouts, std::vector<std::vector<state_id>> successors);

    [[nodiscard]] std::size_t num_agents() const { return agents_.size(); }
    [[nodiscard]] std::size_t num_states() const { return states_.size(); }
    [[nodiscard]] std::size_t num_actions() const { return actions_.size(); }
    [[nodiscard]] std::size_t num_transitions() const;

    [[nodiscard]] const std::string& agent_name(agent_id a) const { return agents_[a.value]; }
    [[nodiscard]] const std::string& state_name(state_id s) const { return states_[s.value]; }
    [[nodiscard]] const std::string& action_name(action_id a) const { return actions_[a.value]; }
    [[nodiscard]] const std::vector<std::string>& agent_names() const { return agents_; }
    [[nodiscard]] const std::vector<std::string>& state_names() const { return states_; }
    [[nodiscard]] const std::vector<std::string>& action_names() const { return actions_; }

    [[nodiscard]] std::optional<agent_id> find_agent(std::string_view name) const;
    [[nodiscard]] std::optional<state_id> find_state(std::string_view name) const;
    [[nodiscard]] std::optional<action_id> find_action(std::string_view name) const;

    [[nodiscard]] coalition grand_coalition() const { return coalition::first_n(num_agents()); }
    [[nodiscard]] state_set all_states() const { return state_set{ num_states(), true }; }

    [[nodiscard]] const profile_layout& layout(state_id s) const { return layouts_[s.value]; }
    [[nodiscard]] std::span<const action_id> available(state_id s, agent_id a) const
    {
        return layouts_[s.value].available(a);
    }
    [[nodiscard]] std::uint64_t profile_count(state_id s) const { return layouts_[s.value].count(); }
    [[nodiscard]] state_id successor(state_id s, profile_code code) const { return successors_[s.value][code]; }

    /// Throws model_error(UnavailableAction) if the profile is not available at `s`.
    [[nodiscard]] state_id outcome(state_id s, const action_profile& profile) const;
    [[nodiscard]] profile_code encode(state_id s, const action_profile& profile) const;

    /// Cartesian product of the members' available actions at `s`, in
    /// lexicographic order. The empty coalition has one empty joint action.
    [[nodiscard]] std::vector<joint_action> joint_actions(state_id s, coalition c) const;

    /// Every full profile at `s` that agrees with `joint` on its members.
    [[nodiscard]] std::vector<action_profile> completions(state_id s, const joint_action& joint) const;

    [[nodiscard]] std::uint64_t joint_count(state_id s, coalition c) const;
    /// Index of the joint action of `c` contained in the profile `code`.
    [[nodiscard]] std::uint64_t project(state_id s, std::span<const agent_id> members, profile_code code) const;

    [[nodiscard]] std::span<const predecessor> predecessors(state_id s) const
    {
        return { preds_.data() + pred_offsets_[s.value], preds_.data() + pred_offsets_[s.value + 1] };
    }
    /// Distinct successors in ascending state order.
    [[nodiscard]] std::span<const edge> edges(state_id s) const
    {
        return { edges_.data() + edge_offsets_[s.value], edges_.data() + edge_offsets_[s.value + 1] };
    }

private:
    std::vector<std::string> agents_;
    std::vector<std::string> states_;
    std::vector<std::string> actions_;
    std::unordered_map<std::string, agent_id> agent_index_;
    std::unordered_map<std::string, state_id> state_index_;
    std::unordered_map<std::string, action_id> action_index_;

    std::vector<profile_layout> layouts_;
    std::vector<std::vector<state_id>> successors_;

    std::vector<std::size_t> pred_offsets_;
    std::vector<predecessor> preds_;
    std::vector<std::size_t> edge_offsets_;
    std::vector<edge> edges_;
};

/// Profile rendered as `a1=a,a2=b`.
std::string format_profile(const cgs& model, const action_profile& profile);

} // namespace respdeg
