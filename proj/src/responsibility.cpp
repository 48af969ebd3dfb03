#include "respdeg/responsibility.hpp"

#include "respdeg/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace respdeg
{

std::string_view to_string(preclusion_semantics s)
{
    return s == preclusion_semantics::future_avoidance ? "future" : "include-initial";
}

namespace
{

bool cpre_contains(const cgs& model, std::span<const agent_id> members, coalition c, state_id q,
                   const state_set& target, std::vector<char>& bad)
{
    bad.assign(model.joint_count(q, c), 0);
    const auto profiles = model.profile_count(q);
    for (profile_code code = 0; code < profiles; ++code)
        if (!target.test(model.successor(q, code)))
            bad[model.project(q, members, code)] = 1;
    return std::find(bad.begin(), bad.end(), 0) != bad.end();
}

} // namespace

state_set cpre(const cgs& model, coalition c, const state_set& target)
{
    const auto members = c.members();
    state_set out{ model.num_states() };
    std::vector<char> bad;
    for (std::size_t q = 0; q < model.num_states(); ++q)
        if (cpre_contains(model, members, c, state_id{ q }, target, bad))
            out.set(state_id{ q });
    return out;
}

state_set safe_region(const cgs& model, coalition c, const state_set& affairs)
{
    const auto members = c.members();
    const auto n = model.num_states();

    std::vector<std::size_t> offset(n + 1, 0);
    std::vector<std::uint64_t> alive(n);
    for (std::size_t q = 0; q < n; ++q)
    {
        alive[q] = model.joint_count(state_id{ q }, c);
        offset[q + 1] = offset[q] + alive[q];
    }
    std::vector<char> retired(offset[n], 0);

    state_set region = affairs.complement();
    std::vector<state_id> removed = affairs.elements();
    removed.reserve(n);
    for (std::size_t head = 0; head < removed.size(); ++head)
    {
        for (const auto& [from, code] : model.predecessors(removed[head]))
        {
            if (!region.test(from))
                continue;
            auto& slot = retired[offset[from.value] + model.project(from, members, code)];
            if (slot)
                continue;
            slot = 1;
            if (--alive[from.value] == 0)
            {
                region.reset(from);
                removed.push_back(from);
            }
        }
    }
    return region;
}

state_set safe_region_by_iteration(const cgs& model, coalition c, const state_set& affairs)
{
    state_set x = affairs.complement();
    while (true)
    {
        state_set next = cpre(model, c, x);
        next &= x;
        if (next == x)
            return x;
        x = std::move(next);
    }
}

state_set winning_states(const cgs& model, coalition c, const state_set& affairs, preclusion_semantics semantics)
{
    auto safe = safe_region(model, c, affairs);
    if (semantics == preclusion_semantics::include_initial)
        return safe;
    return cpre(model, c, safe);
}

bool can_preclude(const cgs& model, coalition c, state_id state, const state_set& affairs,
                  preclusion_semantics semantics)
{
    const auto safe = safe_region(model, c, affairs);
    if (semantics == preclusion_semantics::include_initial)
        return safe.test(state);
    std::vector<char> bad;
    return cpre_contains(model, c.members(), c, state, safe, bad);
}

preclusion_cache::preclusion_cache(const cgs& model, state_set affairs, preclusion_semantics semantics)
    : model_{ &model }, affairs_{ std::move(affairs) }, semantics_{ semantics }
{
}

const state_set& preclusion_cache::winning(coalition c) const
{
    {
        std::lock_guard lock{ mutex_ };
        if (auto it = winning_.find(c.bits()); it != winning_.end())
            return it->second;
    }
    auto computed = winning_states(*model_, c, affairs_, semantics_);
    std::lock_guard lock{ mutex_ };
    return winning_.try_emplace(c.bits(), std::move(computed)).first->second;
}

bool responsible_set::contains(coalition c) const
{
    return std::binary_search(coalitions.begin(), coalitions.end(), c, coalition_order{});
}

responsible_set responsible_coalitions(const cgs& model, state_id state, const state_set& affairs,
                                       preclusion_semantics semantics, unsigned threads)
{
    const auto k = model.num_agents();
    if (k > 30)
        throw std::length_error("responsible coalition enumeration is limited to 30 agents");

    std::vector<std::vector<std::uint64_t>> layers(k + 1);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{ 1 } << k); ++bits)
        layers[coalition{ bits }.size()].push_back(bits);

    std::vector<char> responsible(std::size_t{ 1 } << k, 0);
    for (std::size_t size = 1; size <= k; ++size)
    {
        const auto& layer = layers[size];
        parallel_for(layer.size(), threads, [&](std::size_t i) {
            const auto bits = layer[i];
            for (auto rest = bits; rest != 0; rest &= rest - 1)
            {
                const auto smaller = bits & ~(rest & (~rest + 1));
                if (smaller != 0 && responsible[smaller])
                {
                    responsible[bits] = 1;
                    return;
                }
            }
            responsible[bits] = can_preclude(model, coalition{ bits }, state, affairs, semantics) ? 1 : 0;
        });
    }

    responsible_set out{ state, affairs, {} };
    for (const auto& layer : layers)
        for (auto bits : layer)
            if (responsible[bits])
                out.coalitions.emplace_back(bits);
    return out;
}

std::vector<coalition> minimal_responsible_coalitions(const responsible_set& responsible)
{
    std::unordered_set<std::uint64_t> members;
    for (auto c : responsible.coalitions)
        members.insert(c.bits());
    std::vector<coalition> out;
    for (auto c : responsible.coalitions)
    {
        bool minimal = true;
        for (auto rest = c.bits(); rest != 0 && minimal; rest &= rest - 1)
        {
            const auto smaller = c.bits() & ~(rest & (~rest + 1));
            minimal = !members.contains(smaller);
        }
        if (minimal)
            out.push_back(c);
    }
    return out;
}

std::vector<coalition> upward_closure(std::span<const coalition> antichain, std::size_t num_agents)
{
    std::vector<coalition> out;
    for (auto c : coalitions_by_size(num_agents, false))
        if (std::any_of(antichain.begin(), antichain.end(), [c](coalition a) { return a.is_subset_of(c); }))
            out.push_back(c);
    return out;
}

} // namespace respdeg
