#pragma once

#include "respdeg/cgs.hpp"

#include <mutex>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace respdeg
{

/// When a play has to stay out of the state of affairs.
enum class preclusion_semantics
{
    /// Every state after the first one (steps >= 1).
    future_avoidance,
    /// Every state including the current one (steps >= 0).
    include_initial,
};

std::string_view to_string(preclusion_semantics s);

/// States from which `c` has a joint action that keeps every successor in
/// `target`, whatever the other agents do.
state_set cpre(const cgs& model, coalition c, const state_set& target);

/// Greatest X within Q\S with X a subset of cpre(c, X): the states from which
/// `c` keeps every play out of `affairs` forever. Computed with a worklist
/// that retires joint actions as their successors leave the region, which is
/// linear in the number of transitions.
state_set safe_region(const cgs& model, coalition c, const state_set& affairs);

/// The same region as `safe_region` by plain Kleene iteration
/// X(n+1) = X(n) & cpre(c, X(n)) starting from Q\S.
state_set safe_region_by_iteration(const cgs& model, coalition c, const state_set& affairs);

/// Every state at which `c` can preclude `affairs`.
state_set winning_states(const cgs& model, coalition c, const state_set& affairs, preclusion_semantics semantics);

bool can_preclude(const cgs& model, coalition c, state_id state, const state_set& affairs,
                  preclusion_semantics semantics = preclusion_semantics::future_avoidance);

/// Memoizes `winning_states` per coalition for a fixed state of affairs and
/// semantics. Safe for concurrent use; concurrent misses on the same
/// coalition may both compute, and the first stored result wins.
class preclusion_cache
{
    const cgs* model_;
    state_set affairs_;
    preclusion_semantics semantics_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, state_set> winning_;

public:
    preclusion_cache(const cgs& model, state_set affairs, preclusion_semantics semantics);

    [[nodiscard]] const cgs& model() const { return *model_; }
    [[nodiscard]] const state_set& affairs() const { return affairs_; }
    [[nodiscard]] preclusion_semantics semantics() const { return semantics_; }

    const state_set& winning(coalition c) const;
    bool can_preclude(coalition c, state_id state) const { return winning(c).test(state); }
};

/// All non-empty coalitions that can preclude the affairs at `state`, in
/// (cardinality, bitset) order.
struct responsible_set
{
    state_id state;
    state_set affairs;
    std::vector<coalition> coalitions;

    [[nodiscard]] bool empty() const { return coalitions.empty(); }
    [[nodiscard]] bool contains(coalition c) const;
};

/// Supersets of a responsible coalition are marked without running the
/// fixpoint again. Coalitions of the same size are checked on up to
/// `threads` workers; the result does not depend on the thread count.
responsible_set responsible_coalitions(const cgs& model, state_id state, const state_set& affairs,
                                       preclusion_semantics semantics = preclusion_semantics::future_avoidance,
                                       unsigned threads = 1);

/// The subset-minimal members of an upward closed responsible set.
std::vector<coalition> minimal_responsible_coalitions(const responsible_set& responsible);

/// Every non-empty coalition over `num_agents` agents that contains a member
/// of `antichain`, in (cardinality, bitset) order.
std::vector<coalition> upward_closure(std::span<const coalition> antichain, std::size_t num_agents);

} // namespace respdeg
