#include "respdeg/oracle.hpp"

#include <functional>

namespace respdeg
{

budget_exceeded::budget_exceeded(std::uint64_t count)
    : std::runtime_error("oracle budget exceeded: " + std::to_string(count) + " candidates"), count_{ count }
{
}

namespace
{

bool follows(const action_profile& p, const positional_strategy& strategy, std::span<const agent_id> members,
             state_id q)
{
    for (std::size_t m = 0; m < members.size(); ++m)
        if (p.choices[members[m].value] != strategy.choice[m][q.value])
            return false;
    return true;
}

state_set reachable_from(const cgs& model, state_id state)
{
    state_set seen{ model.num_states() };
    seen.set(state);
    std::vector<state_id> stack{ state };
    while (!stack.empty())
    {
        const auto q = stack.back();
        stack.pop_back();
        for (profile_code code = 0; code < model.profile_count(q); ++code)
        {
            const auto to = model.successor(q, code);
            if (!seen.test(to))
            {
                seen.set(to);
                stack.push_back(to);
            }
        }
    }
    return seen;
}

} // namespace

bool strategy_precludes(const cgs& model, const positional_strategy& strategy, state_id state,
                        const state_set& affairs, preclusion_semantics semantics)
{
    if (semantics == preclusion_semantics::include_initial && affairs.test(state))
        return false;
    const auto members = strategy.members.members();

    // Every state a play can occupy at step i, for i = 1..|Q|. A play that
    // reaches S later also reaches it within |Q| steps once cycles are cut.
    state_set current{ model.num_states() };
    current.set(state);
    for (std::size_t step = 1; step <= model.num_states(); ++step)
    {
        state_set next{ model.num_states() };
        for (auto q : current.elements())
        {
            const auto& layout = model.layout(q);
            for (profile_code code = 0; code < layout.count(); ++code)
                if (follows(layout.decode(code), strategy, members, q))
                    next.set(model.successor(q, code));
        }
        if (next.intersects(affairs))
            return false;
        current = std::move(next);
    }
    return true;
}

bool oracle_can_preclude(const cgs& model, coalition c, state_id state, const state_set& affairs,
                         preclusion_semantics semantics, const oracle_budget& budget)
{
    if (semantics == preclusion_semantics::include_initial && affairs.test(state))
        return false;

    const auto members = c.members();
    const auto relevant = reachable_from(model, state).elements();

    struct digit
    {
        std::size_t member;
        state_id q;
        std::size_t radix;
    };
    std::vector<digit> digits;
    std::uint64_t total = 1;
    for (auto q : relevant)
        for (std::size_t m = 0; m < members.size(); ++m)
        {
            const auto radix = model.available(q, members[m]).size();
            digits.push_back({ m, q, radix });
            if (total > budget.max_strategies / radix)
                throw budget_exceeded(total * radix);
            total *= radix;
        }

    positional_strategy strategy{ c, std::vector<std::vector<action_id>>(members.size()) };
    for (std::size_t m = 0; m < members.size(); ++m)
        for (std::size_t q = 0; q < model.num_states(); ++q)
            strategy.choice[m].push_back(model.available(state_id{ q }, members[m]).front());

    std::vector<std::size_t> odometer(digits.size(), 0);
    while (true)
    {
        for (std::size_t d = 0; d < digits.size(); ++d)
            strategy.choice[digits[d].member][digits[d].q.value] =
                model.available(digits[d].q, members[digits[d].member])[odometer[d]];
        if (strategy_precludes(model, strategy, state, affairs, semantics))
            return true;

        std::size_t d = 0;
        for (; d < digits.size(); ++d)
        {
            if (++odometer[d] < digits[d].radix)
                break;
            odometer[d] = 0;
        }
        if (d == digits.size())
            return false;
    }
}

std::optional<std::size_t> oracle_distance(const cgs& model, coalition c, state_id state, const state_set& affairs,
                                           preclusion_semantics semantics, const oracle_budget& budget)
{
    std::vector<std::optional<bool>> verdict(model.num_states());
    auto precludes_at = [&](state_id q) {
        auto& v = verdict[q.value];
        if (!v)
            v = oracle_can_preclude(model, c, q, affairs, semantics, budget);
        return *v;
    };

    std::optional<std::size_t> best;
    std::uint64_t paths = 0;
    std::function<void(state_id, std::size_t)> walk = [&](state_id q, std::size_t length) {
        if (++paths > budget.max_paths)
            throw budget_exceeded(paths);
        if (best && length >= *best)
            return;
        if (precludes_at(q))
        {
            best = length;
            return;
        }
        if (length == model.num_states())
            return;
        for (profile_code code = 0; code < model.profile_count(q); ++code)
            walk(model.successor(q, code), length + 1);
    };
    walk(state, 0);
    return best;
}

} // namespace respdeg
