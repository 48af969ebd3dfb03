#pragma once

#include "respdeg/responsibility.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace respdeg
{

// Reference decision procedures for small models. They enumerate positional
// strategies and profile paths explicitly and share no code with the
// fixpoint or the breadth-first search they are used to check.

struct oracle_budget
{
    std::uint64_t max_strategies = std::uint64_t{ 1 } << 20;
    std::uint64_t max_paths = std::uint64_t{ 1 } << 22;
};

class budget_exceeded : public std::runtime_error
{
    std::uint64_t count_;

public:
    explicit budget_exceeded(std::uint64_t count);
    [[nodiscard]] std::uint64_t count() const { return count_; }
};

/// choice[m][q] is the action of the m-th member (ascending agent order) at
/// state q.
struct positional_strategy
{
    coalition members;
    std::vector<std::vector<action_id>> choice;
};

/// True iff every play from `state` in which the members follow `strategy`
/// stays out of `affairs` (from step 1, or from step 0 for include-initial).
bool strategy_precludes(const cgs& model, const positional_strategy& strategy, state_id state,
                        const state_set& affairs, preclusion_semantics semantics);

/// Exhaustive search for a positional strategy of `c` that precludes.
/// Throws budget_exceeded if there are more candidate strategies than the
/// budget allows.
bool oracle_can_preclude(const cgs& model, coalition c, state_id state, const state_set& affairs,
                         preclusion_semantics semantics, const oracle_budget& budget = {});

/// Shortest length of a full-profile path from `state` to a state where
/// `oracle_can_preclude` holds, by enumerating every path of length at most
/// |Q|. Nullopt when there is none.
std::optional<std::size_t> oracle_distance(const cgs& model, coalition c, state_id state, const state_set& affairs,
                                           preclusion_semantics semantics, const oracle_budget& budget = {});

} // namespace respdeg
